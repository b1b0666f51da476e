#pragma once

#include <cstdint>

namespace coordtrie {

/// Node ids live in [0, n_max); 0 is the root. Symbol ids live in [0, m).
/// Both are 32-bit so the hash input x*m + y always fits 64 bits.
using node_id = std::uint32_t;
using symbol_id = std::uint32_t;

} // namespace coordtrie
