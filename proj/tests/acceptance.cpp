// Acceptance suite: runs every release criterion at full scale and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// Scales (operation counts, seeds, grid ranges, thresholds) are pinned
// here, in code, and are not configurable: loosening them would change
// what "release-ready" means.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coordtrie/analyzer.hpp"
#include "coordtrie/bench.hpp"
#include "coordtrie/stats.hpp"
#include "coordtrie/string_set.hpp"
#include "harness.hpp"

#ifndef COORDTRIE_CLI_PATH
#error "COORDTRIE_CLI_PATH must point at the CLI binary"
#endif
#ifndef COORDTRIE_TEST_DIR
#error "COORDTRIE_TEST_DIR must point at the tests source directory"
#endif

using namespace coordtrie;

namespace {

// The analysis grid: every slot-count regime (G = 1, 1 < G < m, G = m,
// H < m, H = m, H > key space) appears within these ranges.
constexpr std::uint32_t grid_n_lo = 2, grid_n_hi = 8;
constexpr std::uint32_t grid_m_lo = 1, grid_m_hi = 12;
constexpr std::uint32_t grid_h_lo = 1, grid_h_hi = 40;

struct criterion_outcome {
    bool pass = false;
    std::string detail;
};

criterion_outcome pass_with(std::string detail) { return {true, std::move(detail)}; }
criterion_outcome fail_with(std::string detail) { return {false, std::move(detail)}; }

// --- 1. collision condition <=> hash equality, exhaustively -------------

criterion_outcome check_collision_equivalence() {
    std::size_t instances = 0;
    for (std::uint32_t n = grid_n_lo; n <= grid_n_hi; ++n)
        for (std::uint32_t m = grid_m_lo; m <= grid_m_hi; ++m)
            for (std::uint32_t h = grid_h_lo; h <= grid_h_hi; ++h) {
                ++instances;
                if (auto cex = check_collision_condition(n, m, h)) {
                    std::ostringstream os;
                    os << "counterexample at n_max=" << n << " m=" << m << " H=" << h << ": ("
                       << cex->a.x << "," << cex->a.y << ") vs (" << cex->b.x << "," << cex->b.y
                       << "): " << cex->what;
                    return fail_with(os.str());
                }
            }
    return pass_with(std::to_string(instances) + " instances, all key pairs agree both ways");
}

// --- 2. gcd coordinate bijection + reconstruction ------------------------

criterion_outcome check_bijection() {
    std::size_t instances = 0;
    for (std::uint32_t n = grid_n_lo; n <= grid_n_hi; ++n)
        for (std::uint32_t m = grid_m_lo; m <= grid_m_hi; ++m)
            for (std::uint32_t h = grid_h_lo; h <= grid_h_hi; ++h) {
                ++instances;
                if (auto cex = check_gcd_coordinate_bijection(n, m, h)) {
                    std::ostringstream os;
                    os << "failure at n_max=" << n << " m=" << m << " H=" << h << ": " << cex->what;
                    return fail_with(os.str());
                }
            }
    return pass_with(std::to_string(instances) + " instances, injective with exact reconstruction");
}

// --- 3. saturation never exceeds ceil(n*m/H); bound is tight -------------

criterion_outcome check_saturation() {
    std::size_t instances = 0, tight = 0;
    for (std::uint32_t n = grid_n_lo; n <= grid_n_hi; ++n)
        for (std::uint32_t m = grid_m_lo; m <= grid_m_hi; ++m)
            for (std::uint32_t h = grid_h_lo; h <= grid_h_hi; ++h) {
                ++instances;
                edge_table t = edge_table::with_slot_count(n, m, h);
                for (node_id x = 0; x < n; ++x)
                    for (symbol_id y = 0; y < m; ++y)
                        t.insert(edge_key{x, y}, 1);
                table_report r = analyze(t);
                if (r.max_occupancy > r.occupancy_bound) {
                    std::ostringstream os;
                    os << "n_max=" << n << " m=" << m << " H=" << h << ": occupancy "
                       << r.max_occupancy << " > bound " << r.occupancy_bound;
                    return fail_with(os.str());
                }
                if (r.max_occupancy == r.occupancy_bound)
                    ++tight;
            }
    if (tight == 0)
        return fail_with("bound never achieved; it should be tight somewhere");
    std::ostringstream os;
    os << instances << " saturated tables within bound; tight in " << tight;
    return pass_with(os.str());
}

// --- 4. trie vs direct-mapped oracle, 100 seeds x 1e5 ops ----------------

criterion_outcome check_differential() {
    const std::size_t ops = 100000;
    std::mt19937_64 shape_rng(0xD1FF);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::uint32_t n_max = 2 + static_cast<std::uint32_t>(shape_rng() % 63); // <= 64
        std::uint32_t m = 1 + static_cast<std::uint32_t>(shape_rng() % 8);      // <= 8
        if (auto failure = coordtrie::testing::differential_trial(seed, n_max, m, ops))
            return fail_with(*failure);
    }
    return pass_with("100 seeds x 100000 ops, outcomes and error codes identical");
}

// --- 5. string_set vs sorted-set model, 50 seeds x 1e5 ops ---------------

criterion_outcome check_string_model() {
    const std::size_t ops = 100000;
    std::mt19937_64 shape_rng(0x5E7);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        std::uint32_t m = 1 + static_cast<std::uint32_t>(shape_rng() % 8);        // <= 8
        std::uint32_t n_max = 16 + static_cast<std::uint32_t>(shape_rng() % 241); // <= 256
        if (auto failure = coordtrie::testing::string_model_trial(seed, m, n_max, ops))
            return fail_with(*failure);
    }
    return pass_with("50 seeds x 100000 ops, model-equivalent; leaves terminal after removes");
}

// --- 6. pronoun fixture counts and membership ----------------------------

criterion_outcome check_pronoun_fixture() {
    string_set s(alphabet::bytes(), 10, 0.75);
    for (const auto& w : coordtrie::testing::pronoun_words)
        s.insert(w);

    if (coordtrie::testing::distinct_prefix_count(coordtrie::testing::pronoun_words) != 10)
        return fail_with("prefix oracle disagrees with the expected node count");
    if (s.structure().node_count() != 10)
        return fail_with("node_count is " + std::to_string(s.structure().node_count()) +
                         ", want 10");
    if (s.structure().edge_count() != 9)
        return fail_with("edge_count is " + std::to_string(s.structure().edge_count()) +
                         ", want 9");
    if (s.size() != 4)
        return fail_with("member_count is " + std::to_string(s.size()) + ", want 4");
    for (const auto& w : coordtrie::testing::pronoun_words)
        if (!s.contains(w))
            return fail_with("missing member " + w);
    for (const std::string& w : {std::string("her"), std::string("sh"), std::string("")})
        if (s.contains(w))
            return fail_with("non-member \"" + w + "\" reported present");
    // exactness: nothing else is a member
    if (s.enumerate("") != std::vector<std::string>{"he", "hers", "his", "she"})
        return fail_with("enumerate lists unexpected members");
    return pass_with("counts (10, 9, 4) and exact membership");
}

// --- 7. mean probes bounded and flat across sizes ------------------------

// Picks how many seeded strings fill ~80% of n_max, so realized load (and
// with it the expected probe count) is comparable across sizes.
std::uint64_t fill_count(std::uint64_t n_max, std::uint64_t seed) {
    auto words = uniform_words(n_max, 8, 26, seed); // more than can ever fit
    string_set probe(alphabet::explicit_symbols(
                         std::string("abcdefghijklmnopqrstuvwxyz").substr(0, 26)),
                     n_max, 0.75);
    std::uint64_t count = 0;
    for (const auto& w : words) {
        std::string translated;
        for (char c : w)
            translated.push_back(static_cast<char>('a' + c));
        try {
            probe.insert(translated);
        } catch (const error&) {
            break;
        }
        ++count;
        if (probe.structure().node_count() >= n_max * 4 / 5)
            break;
    }
    return count;
}

criterion_outcome check_mean_probes() {
    const double mean_limit = 1.75;
    std::vector<double> means;
    std::ostringstream detail;
    for (std::uint32_t exp : {8, 10, 12, 14, 16}) {
        bench_config c;
        c.workload = bench_config::workload_kind::uniform_random;
        c.n_max = 1ull << exp;
        c.m = 26;
        c.alpha = 0.75;
        c.string_length = 8;
        c.seed = 1000 + exp;
        c.string_count = fill_count(c.n_max, c.seed);
        bench_result r = run_bench(c);
        if (r.mean_probes_per_walk > mean_limit) {
            std::ostringstream os;
            os << "n_max=2^" << exp << ": mean probes " << r.mean_probes_per_walk << " > "
               << mean_limit;
            return fail_with(os.str());
        }
        if (r.max_probes_per_walk > r.occupancy_bound)
            return fail_with("probe bound violated at n_max=2^" + std::to_string(exp));
        means.push_back(r.mean_probes_per_walk);
        detail << " 2^" << exp << ":" << r.mean_probes_per_walk;
    }
    if (means.back() > means.front() * 1.10) {
        std::ostringstream os;
        os << "upward trend: mean at 2^16 (" << means.back() << ") exceeds 110% of 2^8 ("
           << means.front() << ")";
        return fail_with(os.str());
    }
    return pass_with("means" + detail.str() + " (all <= 1.75, flat)");
}

// --- 8. space: m-invariance, linearity, oracle separation ----------------

criterion_outcome check_space_claims() {
    // m-invariance at n_max = 2^12
    trie narrow(1 << 12, 26, 0.75);
    trie wide(1 << 12, 256, 0.75);
    double diff = std::abs(static_cast<double>(narrow.footprint_bytes()) -
                           static_cast<double>(wide.footprint_bytes())) /
                  static_cast<double>(narrow.footprint_bytes());
    if (diff >= 0.01) {
        std::ostringstream os;
        os << "footprint differs " << diff * 100 << "% between m=26 and m=256";
        return fail_with(os.str());
    }

    // linearity across the size sweep
    std::vector<double> xs, ys;
    for (std::uint32_t exp : {8, 10, 12, 14, 16}) {
        trie t(1ull << exp, 26, 0.75);
        xs.push_back(static_cast<double>(1ull << exp));
        ys.push_back(static_cast<double>(t.footprint_bytes()));
    }
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double intercept = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0, mean_y = sy / n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double fit = slope * xs[i] + intercept;
        ss_res += (ys[i] - fit) * (ys[i] - fit);
        ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    double r2 = 1.0 - ss_res / ss_tot;
    if (!(r2 > 0.999)) {
        std::ostringstream os;
        os << "bytes vs n_max fit R^2 = " << r2 << " <= 0.999";
        return fail_with(os.str());
    }

    // the direct-mapped layout pays for m (m = 256, n_max = 2^12)
    double ratio = static_cast<double>(direct_trie::footprint_bytes_for(1 << 12, 256)) /
                   static_cast<double>(wide.footprint_bytes());
    if (!(ratio > 5.0)) {
        std::ostringstream os;
        os << "oracle/table byte ratio " << ratio << " <= 5";
        return fail_with(os.str());
    }

    std::ostringstream os;
    os << "m-diff " << diff * 100 << "%, R^2 " << r2 << ", oracle ratio " << ratio << "x";
    return pass_with(os.str());
}

// --- 9. zero reallocation across all workloads ---------------------------

criterion_outcome check_no_reallocation() {
    std::vector<bench_result> results;

    bench_config uniform;
    uniform.workload = bench_config::workload_kind::uniform_random;
    uniform.n_max = 1 << 12;
    uniform.m = 26;
    uniform.seed = 21;
    uniform.string_count = fill_count(uniform.n_max, uniform.seed);
    results.push_back(run_bench(uniform));

    bench_config adversarial;
    adversarial.workload = bench_config::workload_kind::adversarial;
    adversarial.n_max = 1 << 10;
    adversarial.m = 8;
    results.push_back(run_bench(adversarial));

    bench_config words;
    words.workload = bench_config::workload_kind::wordlist;
    words.wordlist_path = std::string(COORDTRIE_TEST_DIR) + "/fixtures/pronouns.txt";
    words.n_max = 16;
    results.push_back(run_bench(words));

    for (const auto& r : results)
        if (r.allocation_events != 0)
            return fail_with(r.workload + " workload saw " +
                             std::to_string(r.allocation_events) + " growth events");

    // insert/delete churn on top of a built structure; capacity rejections
    // are part of the workload
    string_set s(alphabet::explicit_symbols("abcd"), 256, 0.75);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50000; ++i) {
        std::string w(1 + rng() % 6, 'a');
        for (auto& c : w)
            c = static_cast<char>('a' + rng() % 4);
        try {
            if (rng() % 2 == 0)
                s.insert(w);
            else
                s.remove(w);
        } catch (const error& e) {
            if (e.code() != errc::capacity_exhausted)
                throw;
        }
    }
    if (s.structure().allocation_events() != 0)
        return fail_with("churn workload grew the slot array or pool");
    return pass_with("uniform, adversarial, wordlist and churn: zero growth events");
}

// --- 10. CLI golden outputs ----------------------------------------------

struct run_result {
    int exit_code = -1;
    std::string out;
};

run_result run_cli(const std::string& args) {
    std::string cmd = std::string(COORDTRIE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    run_result r;
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

criterion_outcome check_cli_golden() {
    std::string fixtures = std::string(COORDTRIE_TEST_DIR) + "/fixtures";
    std::string goldens = std::string(COORDTRIE_TEST_DIR) + "/golden";

    std::string build_args = "build " + fixtures + "/pronouns.txt --capacity 10 --alpha 0.75";
    run_result build1 = run_cli(build_args);
    if (build1.exit_code != 0)
        return fail_with("build exited " + std::to_string(build1.exit_code));
    std::string build_golden = read_file(goldens + "/build_pronouns.json");
    if (build_golden.empty())
        return fail_with("missing golden build_pronouns.json");
    if (build1.out != build_golden)
        return fail_with("build output differs from the golden bytes");

    run_result build2 = run_cli(build_args);
    if (build1.out != build2.out)
        return fail_with("two consecutive builds differ");

    run_result query = run_cli("query " + fixtures +
                               "/pronouns.txt --capacity 10 --alpha 0.75"
                               " he she his hers her sh ''");
    if (query.exit_code != 0)
        return fail_with("query exited " + std::to_string(query.exit_code));
    std::string query_golden = read_file(goldens + "/query_pronouns.txt");
    if (query_golden.empty())
        return fail_with("missing golden query_pronouns.txt");
    if (query.out != query_golden)
        return fail_with("query output differs from the golden bytes");

    return pass_with("build and query reproduce the goldens; runs deterministic");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<criterion_outcome()>>> criteria = {
        {"collision condition <=> hash equality over the full grid", check_collision_equivalence},
        {"gcd coordinates: bijection and reconstruction over the grid", check_bijection},
        {"saturated occupancy <= ceil(n*m/H), bound achieved somewhere", check_saturation},
        {"trie vs direct-mapped oracle: 100 seeds x 1e5 random ops", check_differential},
        {"string set vs sorted-set model: 50 seeds x 1e5 random ops", check_string_model},
        {"{he, she, his, hers} fixture: counts and exact membership", check_pronoun_fixture},
        {"uniform workloads: mean probes <= 1.75 and flat across sizes", check_mean_probes},
        {"space: m-invariant footprint, linear growth, oracle ratio > 5", check_space_claims},
        {"no slot-array or pool growth after construction, any workload", check_no_reallocation},
        {"CLI build/query reproduce golden outputs byte-exactly", check_cli_golden},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        criterion_outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = fail_with(std::string("unexpected exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %2zu. %s — %s [%.1fs]\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str(), secs);
        std::fflush(stdout);
        if (!outcome.pass)
            ++failures;
    }
    if (failures > 0)
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
