#include "coordtrie/string_set.hpp"

#include <string>

namespace coordtrie {

string_set::string_set(alphabet symbols, std::uint64_t n_max, double alpha)
    : alphabet_(std::move(symbols)), trie_(n_max, alphabet_.size(), alpha) {}

bool string_set::contains(std::string_view w) const {
    node_id cur = trie::root;
    for (char c : w) {
        auto y = alphabet_.try_encode(static_cast<unsigned char>(c));
        if (!y)
            return false;
        auto next = trie_.walk(cur, *y);
        if (!next)
            return false;
        cur = *next;
    }
    return trie_.is_terminal(cur);
}

bool string_set::insert(std::string_view w) {
    auto ids = alphabet_.try_encode_all(w);
    if (!ids)
        raise(errc::unknown_symbol, "string contains a byte outside the alphabet");

    // Walk the existing prefix first so capacity can be checked before any
    // node is created; a failed insert must not leave a dangling branch.
    node_id cur = trie::root;
    std::size_t matched = 0;
    while (matched < ids->size()) {
        auto next = trie_.walk(cur, (*ids)[matched]);
        if (!next)
            break;
        cur = *next;
        ++matched;
    }
    std::size_t missing = ids->size() - matched;
    if (missing > static_cast<std::size_t>(trie_.capacity()) - trie_.node_count())
        raise(errc::capacity_exhausted,
              "inserting needs " + std::to_string(missing) + " new nodes but only " +
                  std::to_string(trie_.capacity() - trie_.node_count()) + " of " +
                  std::to_string(trie_.capacity()) + " remain");

    for (; matched < ids->size(); ++matched)
        cur = trie_.insert_child(cur, (*ids)[matched]);

    if (trie_.is_terminal(cur))
        return false;
    trie_.set_terminal(cur, true);
    ++member_count_;
    return true;
}

bool string_set::remove(std::string_view w) {
    auto ids = alphabet_.try_encode_all(w);
    if (!ids)
        return false;

    std::vector<node_id> path;
    path.reserve(ids->size() + 1);
    path.push_back(trie::root);
    for (symbol_id y : *ids) {
        auto next = trie_.walk(path.back(), y);
        if (!next)
            return false;
        path.push_back(*next);
    }
    if (!trie_.is_terminal(path.back()))
        return false;

    trie_.set_terminal(path.back(), false);
    --member_count_;

    // Prune bottom-up while the tail node is a non-terminal leaf. Each step
    // pays one O(m) leaf scan; the root is never deleted.
    for (std::size_t i = ids->size(); i >= 1; --i) {
        node_id node = path[i];
        if (trie_.is_terminal(node) || !trie_.is_leaf(node))
            break;
        trie_.delete_leaf_child(path[i - 1], (*ids)[i - 1]);
    }
    return true;
}

std::vector<std::string> string_set::enumerate(std::string_view prefix) const {
    std::vector<std::string> out;
    auto ids = alphabet_.try_encode_all(prefix);
    if (!ids)
        return out;

    node_id cur = trie::root;
    for (symbol_id y : *ids) {
        auto next = trie_.walk(cur, y);
        if (!next)
            return out;
        cur = *next;
    }

    // Preorder depth-first walk with an explicit stack (depth <= n_max), so
    // pathological chains cannot overflow the call stack. Visiting a node
    // before its subtree plus ascending symbol order gives ascending
    // symbol-id lexicographic output.
    struct frame {
        node_id node;
        symbol_id next_y;
    };
    std::string word(prefix);
    if (trie_.is_terminal(cur))
        out.push_back(word);
    std::vector<frame> stack;
    stack.push_back(frame{cur, 0});
    const symbol_id m = trie_.alphabet_size();
    while (!stack.empty()) {
        frame& top = stack.back();
        if (top.next_y == m) {
            stack.pop_back();
            if (!stack.empty())
                word.pop_back();
            continue;
        }
        symbol_id y = top.next_y++;
        auto child = trie_.walk(top.node, y);
        if (!child)
            continue;
        word.push_back(static_cast<char>(alphabet_.decode(y)));
        if (trie_.is_terminal(*child))
            out.push_back(word);
        stack.push_back(frame{*child, 0});
    }
    return out;
}

} // namespace coordtrie
