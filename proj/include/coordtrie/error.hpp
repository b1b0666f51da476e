#pragma once

#include <stdexcept>
#include <string>

namespace coordtrie {

/// Failure taxonomy shared by every module. Tests match on the code, not
/// the message text.
enum class errc {
    invalid_parameter,
    duplicate_symbol,
    empty_alphabet,
    unknown_symbol,
    id_out_of_range,
    key_out_of_range,
    duplicate_key,
    table_full,
    value_is_root,
    key_not_found,
    dead_node,
    symbol_out_of_range,
    edge_exists,
    capacity_exhausted,
    no_such_edge,
    child_not_leaf,
    io_error,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace coordtrie
