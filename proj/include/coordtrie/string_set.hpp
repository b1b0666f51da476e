#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coordtrie/alphabet.hpp"
#include "coordtrie/trie.hpp"

namespace coordtrie {

/// String dictionary over the trie: membership, idempotent insert, remove
/// with eager leaf pruning, and ordered prefix enumeration.
///
/// Invariant kept by remove(): every leaf of the trie is terminal, so the
/// node count always equals the number of distinct prefixes of the member
/// set (root included).
///
/// Same concurrency contract as trie: concurrent readers OR one writer.
class string_set {
public:
    string_set(alphabet symbols, std::uint64_t n_max, double alpha);

    /// True iff w is a member. Strings with out-of-alphabet bytes are never
    /// members, so they report false rather than erroring.
    bool contains(std::string_view w) const;

    /// Adds w; returns true when newly added. Rejects the whole insert with
    /// CapacityExhausted before mutating anything if the path does not fit.
    bool insert(std::string_view w);

    /// Removes w and prunes its path bottom-up while nodes stay
    /// non-terminal leaves. Returns false (no change) if w was absent.
    bool remove(std::string_view w);

    /// All members starting with `prefix`, ascending in symbol-id order.
    /// Out-of-alphabet prefixes match nothing.
    std::vector<std::string> enumerate(std::string_view prefix) const;

    std::size_t size() const noexcept { return member_count_; }
    const alphabet& symbols() const noexcept { return alphabet_; }
    const trie& structure() const noexcept { return trie_; }
    trie& structure() noexcept { return trie_; }

private:
    alphabet alphabet_;
    trie trie_;
    std::size_t member_count_ = 0;
};

} // namespace coordtrie
