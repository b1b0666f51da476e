#include "coordtrie/direct_trie.hpp"

#include <string>

namespace coordtrie {

direct_trie::direct_trie(std::uint64_t n_max, std::uint64_t m) {
    if (n_max == 0)
        raise(errc::invalid_parameter, "n_max must be >= 1");
    if (m == 0)
        raise(errc::invalid_parameter, "alphabet size m must be >= 1");
    if (n_max > 0xFFFFFFFFull || m > 0xFFFFFFFFull)
        raise(errc::invalid_parameter, "n_max and m must fit 32-bit ids");
    n_max_ = static_cast<std::uint32_t>(n_max);
    m_ = static_cast<std::uint32_t>(m);
    cells_.assign(static_cast<std::size_t>(n_max) * m, 0);
    terminal_.assign(n_max_, false);
    live_.assign(n_max_, false);
    live_[root] = true;
    free_list_.reserve(n_max_ - 1);
}

void direct_trie::check_live(node_id x) const {
    if (!is_live(x))
        raise(errc::dead_node, "node " + std::to_string(x) + " is not live");
}

void direct_trie::check_symbol(symbol_id y) const {
    if (y >= m_)
        raise(errc::symbol_out_of_range,
              "symbol " + std::to_string(y) + " outside [0, " + std::to_string(m_) + ")");
}

std::optional<node_id> direct_trie::walk(node_id x, symbol_id y) const {
    check_live(x);
    check_symbol(y);
    node_id z = cell(x, y);
    if (z == 0)
        return std::nullopt;
    return z;
}

node_id direct_trie::insert_child(node_id x, symbol_id y) {
    check_live(x);
    check_symbol(y);
    if (cell(x, y) != 0)
        raise(errc::edge_exists,
              "node " + std::to_string(x) + " already has a child along symbol " + std::to_string(y));
    if (live_count_ == n_max_)
        raise(errc::capacity_exhausted,
              "trie holds its capacity of " + std::to_string(n_max_) + " nodes");

    node_id z;
    if (!free_list_.empty()) {
        z = free_list_.back();
        free_list_.pop_back();
    } else {
        z = next_fresh_++;
    }
    cell(x, y) = z;
    live_[z] = true;
    terminal_[z] = false;
    ++live_count_;
    ++edge_count_;
    return z;
}

void direct_trie::delete_leaf_child(node_id x, symbol_id y) {
    check_live(x);
    check_symbol(y);
    node_id z = cell(x, y);
    if (z == 0)
        raise(errc::no_such_edge,
              "node " + std::to_string(x) + " has no child along symbol " + std::to_string(y));
    if (!is_leaf(z))
        raise(errc::child_not_leaf, "node " + std::to_string(z) + " still has children");

    cell(x, y) = 0;
    live_[z] = false;
    terminal_[z] = false;
    free_list_.push_back(z);
    --live_count_;
    --edge_count_;
}

bool direct_trie::is_leaf(node_id x) const {
    check_live(x);
    for (symbol_id y = 0; y < m_; ++y)
        if (cell(x, y) != 0)
            return false;
    return true;
}

void direct_trie::set_terminal(node_id x, bool flag) {
    check_live(x);
    terminal_[x] = flag;
}

bool direct_trie::is_terminal(node_id x) const {
    check_live(x);
    return terminal_[x];
}

std::vector<std::pair<symbol_id, node_id>> direct_trie::children(node_id x) const {
    check_live(x);
    std::vector<std::pair<symbol_id, node_id>> out;
    for (symbol_id y = 0; y < m_; ++y)
        if (node_id z = cell(x, y); z != 0)
            out.emplace_back(y, z);
    return out;
}

std::size_t direct_trie::footprint_bytes_for(std::uint64_t n_max, std::uint64_t m) noexcept {
    std::size_t cell_bytes = static_cast<std::size_t>(n_max) * m * sizeof(node_id);
    std::size_t flag_bytes = 2 * ((n_max + 7) / 8);
    std::size_t allocator_bytes = (n_max > 0 ? n_max - 1 : 0) * sizeof(node_id);
    return cell_bytes + flag_bytes + allocator_bytes;
}

} // namespace coordtrie
