#include "coordtrie/analyzer.hpp"

#include <numeric>

namespace coordtrie {

namespace {

void validate(std::uint64_t n_max, std::uint64_t m, std::uint64_t slot_count) {
    if (n_max == 0 || m == 0 || slot_count == 0)
        raise(errc::invalid_parameter, "n_max, m and the slot count must all be >= 1");
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return a / b + (a % b != 0 ? 1 : 0);
}

std::uint64_t flat_index(edge_key k, std::uint64_t m) {
    return static_cast<std::uint64_t>(k.x) * m + k.y;
}

edge_key key_at(std::uint64_t v, std::uint64_t m) {
    return edge_key{static_cast<node_id>(v / m), static_cast<symbol_id>(v % m)};
}

} // namespace

gcd_coordinate gcd_coord(edge_key k, std::uint64_t slot_count, std::uint64_t m) {
    if (m == 0 || slot_count == 0)
        raise(errc::invalid_parameter, "slot count and m must be >= 1");
    if (k.y >= m)
        raise(errc::invalid_parameter, "symbol component outside [0, m)");
    std::uint64_t g = std::gcd(slot_count, m);
    std::uint64_t v = flat_index(k, m);
    return gcd_coordinate{v / g, v % g, g};
}

bool collision_condition(edge_key a, edge_key b, std::uint64_t slot_count, std::uint64_t m) {
    gcd_coordinate ca = gcd_coord(a, slot_count, m);
    gcd_coordinate cb = gcd_coord(b, slot_count, m);
    std::uint64_t period = slot_count / ca.g; // H/G; G divides H
    return ca.y_prime == cb.y_prime && ca.x_prime % period == cb.x_prime % period;
}

std::optional<analysis_counterexample>
check_collision_condition(std::uint64_t n_max, std::uint64_t m, std::uint64_t slot_count) {
    validate(n_max, m, slot_count);
    std::uint64_t keys = n_max * m;
    for (std::uint64_t va = 0; va < keys; ++va) {
        edge_key a = key_at(va, m);
        for (std::uint64_t vb = va; vb < keys; ++vb) {
            edge_key b = key_at(vb, m);
            bool predicted = collision_condition(a, b, slot_count, m);
            bool actual = (va % slot_count) == (vb % slot_count);
            if (predicted != actual)
                return analysis_counterexample{
                    a, b,
                    predicted ? "predicted a collision but hashes differ"
                              : "hashes collide but the condition denies it"};
        }
    }
    return std::nullopt;
}

std::optional<analysis_counterexample>
check_gcd_coordinate_bijection(std::uint64_t n_max, std::uint64_t m, std::uint64_t slot_count) {
    validate(n_max, m, slot_count);
    std::uint64_t g = std::gcd(slot_count, m);
    std::uint64_t keys = n_max * m;
    std::vector<bool> seen(keys, false);
    for (std::uint64_t v = 0; v < keys; ++v) {
        edge_key k = key_at(v, m);
        gcd_coordinate c = gcd_coord(k, slot_count, m);
        if (c.y_prime >= g)
            return analysis_counterexample{k, k, "y' outside [0, gcd(H, m))"};
        if (c.x_prime * g >= keys) // x' < n_max*m / G, as reals
            return analysis_counterexample{k, k, "x' outside [0, n_max*m / gcd(H, m))"};
        if (c.x_prime * g + c.y_prime != v)
            return analysis_counterexample{k, k, "x'*G + y' does not reconstruct x*m + y"};
        std::uint64_t packed = c.x_prime * g + c.y_prime;
        if (seen[packed])
            return analysis_counterexample{k, key_at(packed, m), "two keys share a gcd coordinate"};
        seen[packed] = true;
    }
    return std::nullopt;
}

std::uint64_t occupancy_bound(std::uint64_t n_max, std::uint64_t m, std::uint64_t slot_count) {
    validate(n_max, m, slot_count);
    return ceil_div(n_max * m, slot_count);
}

table_report analyze(const edge_table& table) {
    table_report r;
    r.slot_count = table.slot_count();
    r.gcd_slots_alphabet = std::gcd(table.slot_count(), static_cast<std::uint64_t>(table.alphabet_size()));
    r.occupancy_bound = occupancy_bound(table.node_capacity(), table.alphabet_size(), table.slot_count());
    std::size_t total = 0;
    for (std::size_t occ : table.bucket_occupancies()) {
        r.max_occupancy = std::max(r.max_occupancy, occ);
        total += occ;
        ++r.histogram[occ];
    }
    r.mean_occupancy = static_cast<double>(total) / static_cast<double>(table.slot_count());
    return r;
}

} // namespace coordtrie
