#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coordtrie/edge_table.hpp" // node_id / edge_key types
#include "coordtrie/error.hpp"

namespace coordtrie {

/// The ground-truth trie: an n_max x m array where cell (x, y) holds the
/// child id, 0 meaning "no edge" (valid because nothing points at the
/// root). Walking is one array read; memory is Theta(n_max * m) on
/// purpose — this is the baseline the hashed layout is measured against.
///
/// Mirrors trie's contracts exactly (same operations, same error taxonomy,
/// same fresh-then-LIFO id allocation) but shares no code with it, so
/// differential runs compare two independent implementations.
class direct_trie {
public:
    static constexpr node_id root = 0;

    direct_trie(std::uint64_t n_max, std::uint64_t m);

    std::optional<node_id> walk(node_id x, symbol_id y) const;
    node_id insert_child(node_id x, symbol_id y);
    void delete_leaf_child(node_id x, symbol_id y);
    bool is_leaf(node_id x) const;
    void set_terminal(node_id x, bool flag);
    bool is_terminal(node_id x) const;
    std::vector<std::pair<symbol_id, node_id>> children(node_id x) const;

    std::uint32_t node_count() const noexcept { return live_count_; }
    std::uint32_t edge_count() const noexcept { return edge_count_; }
    std::uint32_t capacity() const noexcept { return n_max_; }
    std::uint32_t alphabet_size() const noexcept { return m_; }
    bool is_live(node_id x) const noexcept { return x < n_max_ && live_[x]; }

    std::size_t footprint_bytes() const noexcept { return footprint_bytes_for(n_max_, m_); }

    /// Analytic footprint without building the array: the n_max*m cell
    /// matrix plus the same flag and allocator overhead as the hashed trie.
    static std::size_t footprint_bytes_for(std::uint64_t n_max, std::uint64_t m) noexcept;

private:
    void check_live(node_id x) const;
    void check_symbol(symbol_id y) const;
    node_id& cell(node_id x, symbol_id y) { return cells_[static_cast<std::size_t>(x) * m_ + y]; }
    const node_id& cell(node_id x, symbol_id y) const {
        return cells_[static_cast<std::size_t>(x) * m_ + y];
    }

    std::uint32_t n_max_;
    std::uint32_t m_;
    std::uint32_t live_count_ = 1;
    std::uint32_t edge_count_ = 0;
    node_id next_fresh_ = 1;
    std::vector<node_id> cells_; // n_max * m, 0 = absent
    std::vector<bool> terminal_;
    std::vector<bool> live_;
    std::vector<node_id> free_list_;
};

} // namespace coordtrie
