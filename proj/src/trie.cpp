#include "coordtrie/trie.hpp"

#include <string>

namespace coordtrie {

trie::trie(std::uint64_t n_max, std::uint64_t m, double alpha)
    : edges_(n_max, m, alpha),
      n_max_(edges_.node_capacity()),
      m_(edges_.alphabet_size()),
      terminal_(n_max_, false),
      live_(n_max_, false) {
    live_[root] = true;
    free_list_.reserve(n_max_ > 0 ? n_max_ - 1 : 0); // at most n_max - 1 nodes can ever be freed
    free_list_cap0_ = free_list_.capacity();
}

void trie::check_live(node_id x) const {
    if (!is_live(x))
        raise(errc::dead_node, "node " + std::to_string(x) + " is not live");
}

void trie::check_symbol(symbol_id y) const {
    if (y >= m_)
        raise(errc::symbol_out_of_range,
              "symbol " + std::to_string(y) + " outside [0, " + std::to_string(m_) + ")");
}

std::optional<node_id> trie::walk(node_id x, symbol_id y, std::uint64_t* probes) const {
    check_live(x);
    check_symbol(y);
    return edges_.find(edge_key{x, y}, probes);
}

node_id trie::insert_child(node_id x, symbol_id y) {
    check_live(x);
    check_symbol(y);
    if (edges_.find(edge_key{x, y}))
        raise(errc::edge_exists,
              "node " + std::to_string(x) + " already has a child along symbol " + std::to_string(y));
    if (live_count_ == n_max_)
        raise(errc::capacity_exhausted,
              "trie holds its capacity of " + std::to_string(n_max_) + " nodes");

    // Pick the id before touching anything so a throwing insert leaves the
    // allocator untouched. Recycled ids first, LIFO.
    node_id z = free_list_.empty() ? next_fresh_ : free_list_.back();
    edges_.insert(edge_key{x, y}, z);
    if (free_list_.empty())
        ++next_fresh_;
    else
        free_list_.pop_back();
    live_[z] = true;
    terminal_[z] = false;
    ++live_count_;
    if (free_list_.capacity() != free_list_cap0_) {
        ++allocation_events_;
        free_list_cap0_ = free_list_.capacity();
    }
    return z;
}

void trie::delete_leaf_child(node_id x, symbol_id y) {
    check_live(x);
    check_symbol(y);
    auto z = edges_.find(edge_key{x, y});
    if (!z)
        raise(errc::no_such_edge,
              "node " + std::to_string(x) + " has no child along symbol " + std::to_string(y));
    if (!is_leaf(*z))
        raise(errc::child_not_leaf, "node " + std::to_string(*z) + " still has children");

    edges_.erase(edge_key{x, y});
    live_[*z] = false;
    terminal_[*z] = false;
    free_list_.push_back(*z);
    --live_count_;
    if (free_list_.capacity() != free_list_cap0_) {
        ++allocation_events_;
        free_list_cap0_ = free_list_.capacity();
    }
}

bool trie::is_leaf(node_id x) const {
    check_live(x);
    for (symbol_id y = 0; y < m_; ++y)
        if (edges_.find(edge_key{x, y}))
            return false;
    return true;
}

void trie::set_terminal(node_id x, bool flag) {
    check_live(x);
    terminal_[x] = flag;
}

bool trie::is_terminal(node_id x) const {
    check_live(x);
    return terminal_[x];
}

std::vector<std::pair<symbol_id, node_id>> trie::children(node_id x) const {
    check_live(x);
    std::vector<std::pair<symbol_id, node_id>> out;
    for (symbol_id y = 0; y < m_; ++y)
        if (auto z = edges_.find(edge_key{x, y}))
            out.emplace_back(y, *z);
    return out;
}

std::size_t trie::allocation_events() const noexcept {
    return edges_.allocation_events() + allocation_events_;
}

std::size_t trie::footprint_bytes() const noexcept {
    std::size_t flag_bytes = 2 * ((static_cast<std::size_t>(n_max_) + 7) / 8); // terminal + live bits
    std::size_t allocator_bytes = (n_max_ > 0 ? n_max_ - 1 : 0) * sizeof(node_id);
    return edges_.footprint_bytes() + flag_bytes + allocator_bytes;
}

} // namespace coordtrie
