#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coordtrie/edge_table.hpp"

namespace coordtrie {

/// Trie over integer nodes [0, n_max) and symbols [0, m), with every edge
/// held in one edge_table. Node 0 is the root and is always live. Freed
/// node ids are recycled LIFO so ids never leave [0, n_max).
///
/// Same concurrency contract as edge_table: concurrent readers OR one
/// exclusive writer.
class trie {
public:
    static constexpr node_id root = 0;

    trie(std::uint64_t n_max, std::uint64_t m, double alpha);

    /// Child of x along y, or nullopt. One bucket scan; `probes` counts
    /// chain entries visited.
    std::optional<node_id> walk(node_id x, symbol_id y,
                                std::uint64_t* probes = nullptr) const;

    /// Allocates a fresh node z, connects x ->(y) z, returns z. The new
    /// node is a non-terminal leaf.
    node_id insert_child(node_id x, symbol_id y);

    /// Removes edge (x, y) whose child must be a leaf; the child id goes
    /// back on the free list with its terminal flag cleared.
    void delete_leaf_child(node_id x, symbol_id y);

    /// True iff x has no outgoing edge. Scans all m symbols: O(m).
    bool is_leaf(node_id x) const;

    void set_terminal(node_id x, bool flag);
    bool is_terminal(node_id x) const;

    /// All edges out of x in ascending symbol order. O(m) scan.
    std::vector<std::pair<symbol_id, node_id>> children(node_id x) const;

    std::uint32_t node_count() const noexcept { return live_count_; }
    std::uint32_t edge_count() const noexcept { return static_cast<std::uint32_t>(edges_.size()); }
    std::uint32_t capacity() const noexcept { return n_max_; }
    std::uint32_t alphabet_size() const noexcept { return m_; }
    bool is_live(node_id x) const noexcept { return x < n_max_ && live_[x]; }

    const edge_table& edges() const noexcept { return edges_; }

    /// Post-construction growth events across the edge table and the node
    /// allocator. Stays 0.
    std::size_t allocation_events() const noexcept;

    /// Analytic footprint: edge table + terminal/live flag bits + free-list
    /// reserve. Fixed at construction, independent of m.
    std::size_t footprint_bytes() const noexcept;

private:
    void check_live(node_id x) const;
    void check_symbol(symbol_id y) const;

    edge_table edges_;
    std::uint32_t n_max_;
    std::uint32_t m_;
    std::uint32_t live_count_ = 1;
    node_id next_fresh_ = 1;
    std::vector<bool> terminal_;
    std::vector<bool> live_;
    std::vector<node_id> free_list_;
    std::size_t free_list_cap0_ = 0;
    std::size_t allocation_events_ = 0;
};

} // namespace coordtrie
