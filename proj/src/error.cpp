#include "coordtrie/error.hpp"

namespace coordtrie {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::invalid_parameter: return "invalid_parameter";
        case errc::duplicate_symbol: return "duplicate_symbol";
        case errc::empty_alphabet: return "empty_alphabet";
        case errc::unknown_symbol: return "unknown_symbol";
        case errc::id_out_of_range: return "id_out_of_range";
        case errc::key_out_of_range: return "key_out_of_range";
        case errc::duplicate_key: return "duplicate_key";
        case errc::table_full: return "table_full";
        case errc::value_is_root: return "value_is_root";
        case errc::key_not_found: return "key_not_found";
        case errc::dead_node: return "dead_node";
        case errc::symbol_out_of_range: return "symbol_out_of_range";
        case errc::edge_exists: return "edge_exists";
        case errc::capacity_exhausted: return "capacity_exhausted";
        case errc::no_such_edge: return "no_such_edge";
        case errc::child_not_leaf: return "child_not_leaf";
        case errc::io_error: return "io_error";
    }
    return "unknown";
}

} // namespace coordtrie
