#include "coordtrie/alphabet.hpp"

#include <fstream>
#include <string>

namespace coordtrie {

alphabet alphabet::bytes() {
    alphabet a;
    a.bytes_mode_ = true;
    a.reverse_.resize(256);
    for (int b = 0; b < 256; ++b) {
        a.forward_[b] = b;
        a.reverse_[b] = static_cast<unsigned char>(b);
    }
    return a;
}

alphabet alphabet::explicit_symbols(std::string_view symbols) {
    if (symbols.empty())
        raise(errc::empty_alphabet, "explicit alphabet needs at least one symbol");
    alphabet a;
    a.reverse_.reserve(symbols.size());
    for (char c : symbols) {
        auto b = static_cast<unsigned char>(c);
        if (a.forward_[b] >= 0)
            raise(errc::duplicate_symbol,
                  "duplicate symbol 0x" + std::to_string(b) + " in explicit alphabet");
        a.forward_[b] = static_cast<std::int32_t>(a.reverse_.size());
        a.reverse_.push_back(b);
    }
    return a;
}

alphabet alphabet::from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(errc::io_error, "cannot open alphabet file: " + path.string());
    std::string symbols;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line.size() != 1)
            raise(errc::invalid_parameter,
                  "alphabet line is not a single byte: \"" + line + "\" in " + path.string());
        symbols.push_back(line[0]);
    }
    if (in.bad())
        raise(errc::io_error, "read error on alphabet file: " + path.string());
    return explicit_symbols(symbols);
}

symbol_id alphabet::encode(unsigned char sym) const {
    std::int32_t id = forward_[sym];
    if (id < 0)
        raise(errc::unknown_symbol, "byte 0x" + std::to_string(sym) + " is not in the alphabet");
    return static_cast<symbol_id>(id);
}

std::optional<symbol_id> alphabet::try_encode(unsigned char sym) const noexcept {
    std::int32_t id = forward_[sym];
    if (id < 0)
        return std::nullopt;
    return static_cast<symbol_id>(id);
}

unsigned char alphabet::decode(symbol_id id) const {
    if (id >= reverse_.size())
        raise(errc::id_out_of_range,
              "symbol id " + std::to_string(id) + " out of range [0, " +
                  std::to_string(reverse_.size()) + ")");
    return reverse_[id];
}

std::optional<std::vector<symbol_id>> alphabet::try_encode_all(std::string_view text) const {
    std::vector<symbol_id> ids;
    ids.reserve(text.size());
    for (char c : text) {
        auto id = try_encode(static_cast<unsigned char>(c));
        if (!id)
            return std::nullopt;
        ids.push_back(*id);
    }
    return ids;
}

} // namespace coordtrie
