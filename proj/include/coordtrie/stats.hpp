#pragma once

#include <string>

#include <json.hpp>

#include "coordtrie/analyzer.hpp"
#include "coordtrie/bench.hpp"
#include "coordtrie/string_set.hpp"

namespace coordtrie {

inline constexpr int stats_schema_version = 1;

/// Stats document for a built set: structure parameters, realized counts,
/// occupancy statistics and the analytic footprint. Keys are emitted
/// sorted (nlohmann's default ordering), so dump() is canonical.
nlohmann::json stats_json(const string_set& set);

nlohmann::json bench_json(const bench_result& result);

/// dump() plus trailing newline; one line, sorted keys, no trailing
/// whitespace.
std::string canonical_line(const nlohmann::json& doc);

} // namespace coordtrie
