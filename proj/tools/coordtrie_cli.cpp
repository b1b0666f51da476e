#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>

#include "coordtrie/bench.hpp"
#include "coordtrie/stats.hpp"
#include "coordtrie/string_set.hpp"

namespace {

using namespace coordtrie;

struct build_options {
    std::string wordlist;
    std::string alphabet_spec = "bytes";
    std::uint64_t capacity = 0; // 0 = auto-size from the input
    double alpha = 0.75;
};

void add_build_options(CLI::App* cmd, build_options& opts) {
    cmd->add_option("wordlist", opts.wordlist, "UTF-8 wordlist, one word per line")->required();
    cmd->add_option("--alphabet", opts.alphabet_spec,
                    "bytes (default) or file:PATH with one symbol per line");
    cmd->add_option("--capacity", opts.capacity,
                    "max node count n_max (default: total input bytes + 1)");
    cmd->add_option("--alpha", opts.alpha, "target load factor (default 0.75)");
}

std::vector<std::string> load_words(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(errc::io_error, "cannot open wordlist: " + path);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            words.push_back(line);
    }
    if (in.bad())
        raise(errc::io_error, "read error on wordlist: " + path);
    return words;
}

alphabet resolve_alphabet(const std::string& spec) {
    if (spec == "bytes")
        return alphabet::bytes();
    if (spec.rfind("file:", 0) == 0)
        return alphabet::from_file(spec.substr(5));
    raise(errc::invalid_parameter, "--alphabet must be 'bytes' or 'file:PATH', got: " + spec);
}

std::uint64_t auto_capacity(const std::vector<std::string>& words) {
    std::uint64_t bytes = 0;
    for (const auto& w : words)
        bytes += w.size();
    return bytes + 1; // distinct prefixes never exceed total bytes, +1 for the root
}

std::uint64_t required_nodes(const std::vector<std::string>& words) {
    std::unordered_set<std::string> prefixes;
    prefixes.insert("");
    for (const auto& w : words)
        for (std::size_t len = 1; len <= w.size(); ++len)
            prefixes.insert(w.substr(0, len));
    return prefixes.size();
}

string_set build_set(const build_options& opts) {
    auto words = load_words(opts.wordlist);
    std::uint64_t capacity = opts.capacity != 0 ? opts.capacity : auto_capacity(words);
    string_set set(resolve_alphabet(opts.alphabet_spec), capacity, opts.alpha);
    for (const auto& w : words) {
        try {
            set.insert(w);
        } catch (const error& e) {
            if (e.code() == errc::capacity_exhausted)
                raise(errc::capacity_exhausted,
                      "wordlist needs " + std::to_string(required_nodes(words)) +
                          " nodes but --capacity is " + std::to_string(capacity));
            throw;
        }
    }
    return set;
}

int cmd_build(const build_options& opts) {
    string_set set = build_set(opts);
    std::cout << canonical_line(stats_json(set));
    return 0;
}

int cmd_query(const build_options& opts, const std::vector<std::string>& queries) {
    string_set set = build_set(opts);
    for (const auto& q : queries)
        std::cout << q << '\t' << (set.contains(q) ? "true" : "false") << '\n';
    return 0;
}

int cmd_bench(bench_config cfg) {
    if (cfg.workload == bench_config::workload_kind::wordlist && cfg.n_max == 0)
        cfg.n_max = auto_capacity(load_words(cfg.wordlist_path));
    if (cfg.n_max == 0)
        raise(errc::invalid_parameter, "--capacity is required for this workload");
    for (const bench_result& r : run_trials(cfg))
        std::cout << canonical_line(bench_json(r));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-capacity trie storing all edges in one chained hash table"};
    app.require_subcommand(1);

    build_options build_opts;
    CLI::App* build = app.add_subcommand("build", "build a set and print its stats as JSON");
    add_build_options(build, build_opts);

    build_options query_opts;
    std::vector<std::string> queries;
    CLI::App* query = app.add_subcommand("query", "build a set and answer membership queries");
    add_build_options(query, query_opts);
    query->add_option("queries", queries, "words to look up (order preserved)");

    bench_config cfg;
    std::string workload = "uniform";
    CLI::App* bench = app.add_subcommand("bench", "run a workload and print per-trial JSON");
    bench->add_option("--workload", workload, "uniform | adversarial | wordlist")
        ->check(CLI::IsMember({"uniform", "adversarial", "wordlist"}));
    bench->add_option("--path", cfg.wordlist_path, "wordlist path (wordlist workload)");
    bench->add_option("--strings", cfg.string_count, "string count (uniform workload)");
    bench->add_option("--length", cfg.string_length, "string length (uniform workload)");
    bench->add_option("--m", cfg.m, "alphabet size (uniform/adversarial)");
    bench->add_option("--capacity", cfg.n_max, "max node count n_max");
    bench->add_option("--alpha", cfg.alpha, "target load factor (default 0.75)");
    bench->add_option("--seed", cfg.seed, "workload seed (trial t runs at seed + t)");
    bench->add_option("--trials", cfg.trials, "trial count (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*build)
            return cmd_build(build_opts);
        if (*query)
            return cmd_query(query_opts, queries);
        if (workload == "wordlist")
            cfg.workload = bench_config::workload_kind::wordlist;
        else if (workload == "adversarial")
            cfg.workload = bench_config::workload_kind::adversarial;
        else
            cfg.workload = bench_config::workload_kind::uniform_random;
        return cmd_bench(cfg);
    } catch (const coordtrie::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == errc::capacity_exhausted ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
