#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coordtrie/edge_table.hpp"

namespace coordtrie {

/// Workload description; the seed fully determines the uniform and
/// adversarial workloads, so equal configs reproduce equal results
/// (time fields aside).
struct bench_config {
    enum class workload_kind { wordlist, uniform_random, adversarial };

    workload_kind workload = workload_kind::uniform_random;
    std::string wordlist_path;      // wordlist only
    std::uint64_t string_count = 0; // uniform_random only
    std::uint32_t string_length = 8; // uniform_random only
    std::uint64_t n_max = 0;        // 0 is rejected; callers must size the trie
    std::uint64_t m = 26;           // wordlist always runs at m = 256 (byte alphabet)
    double alpha = 0.75;
    std::uint64_t seed = 0;
    std::uint32_t trials = 1;
};

struct bench_result {
    std::string workload;
    std::uint64_t n_max = 0;
    std::uint64_t m = 0;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    std::uint32_t trial = 0;
    std::uint64_t slot_count = 0; // H
    std::uint32_t node_count = 0;
    std::uint32_t edge_count = 0;
    std::size_t member_count = 0;
    std::uint64_t walk_count = 0;
    double mean_probes_per_walk = 0.0;     // 0 when no walks were made
    std::uint64_t max_probes_per_walk = 0;
    std::uint64_t occupancy_bound = 0;     // ceil(n_max*m / H)
    std::size_t bytes_total = 0;
    double bytes_per_node = 0.0;
    std::size_t oracle_bytes_total = 0;    // direct-mapped layout at the same (n_max, m)
    std::size_t allocation_events = 0;
    double build_seconds = 0.0;
    double query_seconds = 0.0;
};

/// One insertion step of the adversarial build: a key to insert under the
/// current allocation watermark, flagged when it belongs to the loaded
/// hash class.
struct adversarial_step {
    edge_key key;
    bool in_class = false;
};

struct adversarial_plan {
    std::uint64_t slot = 0;               // every in-class key hashes here
    std::vector<adversarial_step> steps;  // child of steps[i] gets id i + 1
    std::size_t class_edges = 0;
};

/// Plans a trie build that drives as many live edges as the tree shape
/// allows into one hash slot: the keys of slot 0's congruence class,
/// reached via filler edges that make their parent nodes live first.
adversarial_plan plan_adversarial(std::uint64_t n_max, std::uint64_t m,
                                  std::uint64_t slot_count);

/// The deterministic string stream used by the uniform workload; the first
/// `count` strings of a seed are a prefix of any longer run.
std::vector<std::string> uniform_words(std::uint64_t count, std::uint32_t length,
                                       std::uint64_t m, std::uint64_t seed);

/// Builds the workload, runs the 50/50 hit/miss query mix with probe
/// instrumentation, and accounts bytes analytically.
bench_result run_bench(const bench_config& config);

/// config.trials runs; trial t uses seed + t.
std::vector<bench_result> run_trials(const bench_config& config);

} // namespace coordtrie
