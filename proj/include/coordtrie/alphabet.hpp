#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "coordtrie/error.hpp"
#include "coordtrie/types.hpp"

namespace coordtrie {

/// Bijective codec between application bytes and dense symbol ids in [0, m).
/// Immutable after construction; safe to share among concurrent readers.
class alphabet {
public:
    /// Identity codec over all byte values, m = 256.
    static alphabet bytes();

    /// Positional codec: symbols[i] <-> id i. Rejects duplicates and the
    /// empty list.
    static alphabet explicit_symbols(std::string_view symbols);

    /// Loads an explicit alphabet: one symbol per line, line order defines
    /// the id. Lines must be exactly one byte (trailing CR/LF stripped).
    static alphabet from_file(const std::filesystem::path& path);

    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(reverse_.size()); }
    bool is_bytes() const noexcept { return bytes_mode_; }

    symbol_id encode(unsigned char sym) const;
    std::optional<symbol_id> try_encode(unsigned char sym) const noexcept;
    unsigned char decode(symbol_id id) const;

    /// Encodes a whole string, or nullopt if any byte is outside the
    /// alphabet.
    std::optional<std::vector<symbol_id>> try_encode_all(std::string_view text) const;

private:
    alphabet() { forward_.fill(-1); }

    std::array<std::int32_t, 256> forward_; // byte -> id, -1 = absent
    std::vector<unsigned char> reverse_;    // id -> byte
    bool bytes_mode_ = false;
};

} // namespace coordtrie
