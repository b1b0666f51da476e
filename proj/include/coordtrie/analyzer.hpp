#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "coordtrie/edge_table.hpp"

namespace coordtrie {

/// The (x', y') decomposition of v = x*m + y by G = gcd(H, m):
/// x' = floor(v / G), y' = v mod G. Keys and their gcd coordinates are in
/// bijection and v = x'*G + y' reconstructs the flat index.
struct gcd_coordinate {
    std::uint64_t x_prime;
    std::uint64_t y_prime;
    std::uint64_t g; // gcd(H, m)
};

/// Occupancy statistics for one table, against the worst-case bound
/// ceil(n_max*m / H).
struct table_report {
    std::uint64_t slot_count = 0;      // H
    std::uint64_t gcd_slots_alphabet = 0; // gcd(H, m)
    std::size_t max_occupancy = 0;
    double mean_occupancy = 0.0;
    std::uint64_t occupancy_bound = 0; // ceil(n_max*m / H)
    std::map<std::size_t, std::size_t> histogram; // occupancy -> slot count
};

/// A key pair where the congruence predicate and actual hash equality
/// disagree, or a key whose gcd coordinate fails to reconstruct.
struct analysis_counterexample {
    edge_key a{};
    edge_key b{};
    const char* what = "";
};

gcd_coordinate gcd_coord(edge_key k, std::uint64_t slot_count, std::uint64_t m);

/// The congruence characterization of a collision: keys a and b share a
/// hash slot iff x'_a = x'_b (mod H/G) and y'_a = y'_b.
bool collision_condition(edge_key a, edge_key b, std::uint64_t slot_count, std::uint64_t m);

/// Checks, over ALL key pairs of the (n_max, m) key space, that the
/// congruence predicate and hash equality agree in both directions.
/// Returns the first disagreeing pair, or nullopt when the check holds.
/// Intended for small instances (the harness keeps n_max*m <= 512).
std::optional<analysis_counterexample>
check_collision_condition(std::uint64_t n_max, std::uint64_t m, std::uint64_t slot_count);

/// Checks that key -> gcd coordinate is injective, stays inside its stated
/// ranges, and reconstructs x*m + y for every key of the key space.
std::optional<analysis_counterexample>
check_gcd_coordinate_bijection(std::uint64_t n_max, std::uint64_t m, std::uint64_t slot_count);

/// ceil(n_max*m / H): the largest number of keys any slot can receive.
std::uint64_t occupancy_bound(std::uint64_t n_max, std::uint64_t m, std::uint64_t slot_count);

/// Occupancy statistics plus the bound for the table's parameters.
table_report analyze(const edge_table& table);

} // namespace coordtrie
