#include "coordtrie/bench.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <fstream>
#include <random>
#include <unordered_set>

#include "coordtrie/analyzer.hpp"
#include "coordtrie/direct_trie.hpp"
#include "coordtrie/string_set.hpp"

namespace coordtrie {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::vector<std::string> read_wordlist(const std::string& path) {
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

/// Distinct prefixes (root included) the words would need; used to report
/// the required capacity when a build overflows.
std::uint64_t required_nodes(const std::vector<std::string>& words) {
    std::unordered_set<std::string> prefixes;
    prefixes.insert("");
    for (const auto& w : words)
        for (std::size_t len = 1; len <= w.size(); ++len)
            prefixes.insert(w.substr(0, len));
    return prefixes.size();
}

struct probe_stats {
    std::uint64_t walks = 0;
    std::uint64_t total = 0;
    std::uint64_t max_per_walk = 0;

    double mean() const { return walks == 0 ? 0.0 : static_cast<double>(total) / walks; }
};

/// Walks one query word symbol-by-symbol, early-exiting where the path
/// ends, accumulating per-walk probe counts.
void walk_query(const trie& t, const alphabet& a, const std::string& word, probe_stats& st) {
    node_id cur = trie::root;
    for (char c : word) {
        auto y = a.try_encode(static_cast<unsigned char>(c));
        if (!y)
            return;
        std::uint64_t probes = 0;
        auto next = t.walk(cur, *y, &probes);
        ++st.walks;
        st.total += probes;
        st.max_per_walk = std::max(st.max_per_walk, probes);
        if (!next)
            return;
        cur = *next;
    }
}

void fill_common_fields(bench_result& r, const trie& t) {
    r.slot_count = t.edges().slot_count();
    r.node_count = t.node_count();
    r.edge_count = t.edge_count();
    r.occupancy_bound = occupancy_bound(t.capacity(), t.alphabet_size(), r.slot_count);
    r.bytes_total = t.footprint_bytes();
    r.bytes_per_node = static_cast<double>(r.bytes_total) / t.node_count();
    r.oracle_bytes_total = direct_trie::footprint_bytes_for(t.capacity(), t.alphabet_size());
    r.allocation_events = t.allocation_events();
}

bench_result run_string_workload(const bench_config& c, const alphabet& a,
                                 std::vector<std::string> words, std::uint64_t actual_m,
                                 std::mt19937_64& rng) {
    bench_result r;
    r.n_max = c.n_max;
    r.m = actual_m;
    r.alpha = c.alpha;
    r.seed = c.seed;

    string_set set(a, c.n_max, c.alpha);

    auto build_start = clock_type::now();
    std::vector<std::string> members;
    members.reserve(words.size());
    for (auto& w : words) {
        bool added;
        try {
            added = set.insert(w);
        } catch (const error& e) {
            if (e.code() == errc::capacity_exhausted)
                raise(errc::capacity_exhausted,
                      "workload needs " + std::to_string(required_nodes(words)) +
                          " nodes but n_max is " + std::to_string(c.n_max));
            throw;
        }
        if (added)
            members.push_back(std::move(w));
    }
    r.build_seconds = seconds_since(build_start);
    r.member_count = set.size();

    // 50/50 hit/miss: every member once, plus the same member with one
    // symbol replaced by a different random alphabet byte.
    auto query_start = clock_type::now();
    probe_stats st;
    const trie& t = set.structure();
    for (const auto& w : members) {
        walk_query(t, a, w, st);
        if (w.empty())
            continue;
        std::string miss = w;
        std::size_t pos = rng() % w.size();
        unsigned char old = static_cast<unsigned char>(miss[pos]);
        unsigned char replacement;
        do {
            replacement = a.decode(static_cast<symbol_id>(rng() % a.size()));
        } while (replacement == old && a.size() > 1);
        miss[pos] = static_cast<char>(replacement);
        walk_query(t, a, miss, st);
    }
    r.query_seconds = seconds_since(query_start);

    r.walk_count = st.walks;
    r.mean_probes_per_walk = st.mean();
    r.max_probes_per_walk = st.max_per_walk;
    fill_common_fields(r, t);
    return r;
}

bench_result run_adversarial(const bench_config& c) {
    bench_result r;
    r.n_max = c.n_max;
    r.m = c.m;
    r.alpha = c.alpha;
    r.seed = c.seed;

    trie t(c.n_max, c.m, c.alpha);
    adversarial_plan plan = plan_adversarial(c.n_max, c.m, t.edges().slot_count());

    auto build_start = clock_type::now();
    node_id expected = 1;
    for (const adversarial_step& step : plan.steps) {
        node_id z = t.insert_child(step.key.x, step.key.y);
        assert(z == expected);
        (void)z;
        ++expected;
    }
    r.build_seconds = seconds_since(build_start);

    auto query_start = clock_type::now();
    probe_stats st;
    for (const adversarial_step& step : plan.steps) {
        if (!step.in_class)
            continue;
        std::uint64_t probes = 0;
        auto z = t.walk(step.key.x, step.key.y, &probes);
        assert(z.has_value());
        (void)z;
        ++st.walks;
        st.total += probes;
        st.max_per_walk = std::max(st.max_per_walk, probes);
    }
    r.query_seconds = seconds_since(query_start);

    r.walk_count = st.walks;
    r.mean_probes_per_walk = st.mean();
    r.max_probes_per_walk = st.max_per_walk;
    r.member_count = 0;
    fill_common_fields(r, t);
    return r;
}

} // namespace

adversarial_plan plan_adversarial(std::uint64_t n_max, std::uint64_t m,
                                  std::uint64_t slot_count) {
    if (n_max == 0 || m == 0 || slot_count == 0)
        raise(errc::invalid_parameter, "n_max, m and the slot count must all be >= 1");
    if (n_max > 0xFFFFFFFFull || m > 0xFFFFFFFFull)
        raise(errc::invalid_parameter, "n_max and m must fit 32-bit ids");

    adversarial_plan plan;
    plan.slot = 0;

    // The slot-0 class, ascending: flat indices 0, H, 2H, ... < n_max*m.
    // A trie holds at most n_max - 1 edges, so enumerating more is wasted;
    // indexing by i also dodges wraparound when the stride is huge.
    std::uint64_t keys = n_max * m;
    std::uint64_t class_size = keys / slot_count + (keys % slot_count != 0 ? 1 : 0);
    class_size = std::min(class_size, n_max);
    std::vector<edge_key> class_keys;
    class_keys.reserve(class_size);
    for (std::uint64_t i = 0; i < class_size; ++i) {
        std::uint64_t v = i * slot_count;
        class_keys.push_back(edge_key{static_cast<node_id>(v / m),
                                      static_cast<symbol_id>(v % m)});
    }

    std::unordered_set<std::uint64_t> used;
    std::size_t next_class = 0;
    std::uint64_t fill_x = 0, fill_y = 0; // filler cursor, only moves forward
    node_id next = 1;                     // id the next inserted child will get

    while (next < n_max) {
        if (next_class < class_keys.size() && class_keys[next_class].x < next) {
            // Parent already live: take the class edge.
            edge_key k = class_keys[next_class++];
            used.insert(static_cast<std::uint64_t>(k.x) * m + k.y);
            plan.steps.push_back(adversarial_step{k, true});
            ++plan.class_edges;
            ++next;
        } else if (next_class < class_keys.size()) {
            // Spend a node on a filler edge so a later class parent goes
            // live. Remaining class keys all have x >= next, so the cursor
            // (x < next) can never steal one.
            while (fill_x < next && used.count(fill_x * m + fill_y)) {
                if (++fill_y == m) {
                    fill_y = 0;
                    ++fill_x;
                }
            }
            if (fill_x >= next)
                break; // every edge below the watermark is taken
            edge_key k{static_cast<node_id>(fill_x), static_cast<symbol_id>(fill_y)};
            used.insert(fill_x * m + fill_y);
            plan.steps.push_back(adversarial_step{k, false});
            ++next;
        } else {
            break;
        }
    }
    return plan;
}

std::vector<std::string> uniform_words(std::uint64_t count, std::uint32_t length,
                                       std::uint64_t m, std::uint64_t seed) {
    if (m == 0 || m > 256)
        raise(errc::invalid_parameter, "uniform workload needs 1 <= m <= 256 (symbols are bytes)");
    std::mt19937_64 rng(seed);
    std::vector<std::string> words(count);
    for (auto& w : words) {
        w.resize(length);
        for (auto& ch : w)
            ch = static_cast<char>(rng() % m);
    }
    return words;
}

bench_result run_bench(const bench_config& c) {
    switch (c.workload) {
        case bench_config::workload_kind::wordlist: {
            std::mt19937_64 rng(c.seed);
            bench_result r = run_string_workload(c, alphabet::bytes(),
                                                 read_wordlist(c.wordlist_path), 256, rng);
            r.workload = "wordlist";
            return r;
        }
        case bench_config::workload_kind::uniform_random: {
            std::mt19937_64 rng(c.seed);
            // Symbols 0..m-1 map to ids 0..m-1; the trie runs at exactly m.
            std::string symbols(c.m, '\0');
            for (std::uint64_t b = 0; b < c.m; ++b)
                symbols[b] = static_cast<char>(b);
            auto words = uniform_words(c.string_count, c.string_length, c.m, c.seed);
            bench_result r = run_string_workload(c, alphabet::explicit_symbols(symbols),
                                                 std::move(words), c.m, rng);
            r.workload = "uniform";
            return r;
        }
        case bench_config::workload_kind::adversarial: {
            bench_result r = run_adversarial(c);
            r.workload = "adversarial";
            return r;
        }
    }
    raise(errc::invalid_parameter, "unknown workload");
}

std::vector<bench_result> run_trials(const bench_config& c) {
    std::vector<bench_result> out;
    out.reserve(c.trials);
    for (std::uint32_t t = 0; t < c.trials; ++t) {
        bench_config one = c;
        one.seed = c.seed + t;
        bench_result r = run_bench(one);
        r.trial = t;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace coordtrie
