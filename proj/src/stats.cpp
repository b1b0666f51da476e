#include "coordtrie/stats.hpp"

namespace coordtrie {

nlohmann::json stats_json(const string_set& set) {
    const trie& t = set.structure();
    table_report report = analyze(t.edges());

    nlohmann::json histogram = nlohmann::json::array();
    for (auto [occupancy, slots] : report.histogram)
        histogram.push_back({occupancy, slots});

    return nlohmann::json{
        {"schema_version", stats_schema_version},
        {"n_max", t.capacity()},
        {"m", t.alphabet_size()},
        {"alpha", t.edges().load_factor_target()},
        {"H", report.slot_count},
        {"G", report.gcd_slots_alphabet},
        {"node_count", t.node_count()},
        {"edge_count", t.edge_count()},
        {"member_count", set.size()},
        {"max_occupancy", report.max_occupancy},
        {"occupancy_bound", report.occupancy_bound},
        {"histogram", histogram},
        {"bytes_total", t.footprint_bytes()},
    };
}

nlohmann::json bench_json(const bench_result& r) {
    return nlohmann::json{
        {"schema_version", stats_schema_version},
        {"workload", r.workload},
        {"n_max", r.n_max},
        {"m", r.m},
        {"alpha", r.alpha},
        {"seed", r.seed},
        {"trial", r.trial},
        {"H", r.slot_count},
        {"node_count", r.node_count},
        {"edge_count", r.edge_count},
        {"member_count", r.member_count},
        {"walk_count", r.walk_count},
        {"mean_probes_per_walk", r.mean_probes_per_walk},
        {"max_probes_per_walk", r.max_probes_per_walk},
        {"occupancy_bound", r.occupancy_bound},
        {"bytes_total", r.bytes_total},
        {"bytes_per_node", r.bytes_per_node},
        {"oracle_bytes_total", r.oracle_bytes_total},
        {"allocation_events", r.allocation_events},
        {"build_seconds", r.build_seconds},
        {"query_seconds", r.query_seconds},
    };
}

std::string canonical_line(const nlohmann::json& doc) {
    return doc.dump() + "\n";
}

} // namespace coordtrie
