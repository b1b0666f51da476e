#include "coordtrie/edge_table.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace coordtrie {

namespace {

constexpr std::uint64_t id_limit = 0xFFFFFFFFull; // node/symbol ids are 32-bit

void validate_dimensions(std::uint64_t n_max, std::uint64_t m) {
    if (n_max == 0)
        raise(errc::invalid_parameter, "n_max must be >= 1");
    if (m == 0)
        raise(errc::invalid_parameter, "alphabet size m must be >= 1");
    if (n_max > id_limit || m > id_limit)
        raise(errc::invalid_parameter,
              "n_max and m must fit 32-bit ids so x*m + y fits the 64-bit hash lane");
}

std::uint64_t slot_count_for(std::uint64_t n_max, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        raise(errc::invalid_parameter, "load factor alpha must be a positive finite real");
    // H = max(1, ceil((n_max - 1) / alpha)); ceiling keeps realized load <= alpha.
    long double h = std::ceil(static_cast<long double>(n_max - 1) / alpha);
    if (h >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
        raise(errc::invalid_parameter, "slot count (n_max - 1) / alpha overflows 64 bits");
    auto slots = static_cast<std::uint64_t>(h);
    return slots == 0 ? 1 : slots;
}

} // namespace

edge_table::edge_table(std::uint64_t n_max, std::uint64_t m, double alpha) {
    validate_dimensions(n_max, m);
    slot_count_ = slot_count_for(n_max, alpha);
    n_max_ = static_cast<std::uint32_t>(n_max);
    m_ = static_cast<std::uint32_t>(m);
    alpha_ = alpha;
    init_storage(n_max - 1); // a trie on <= n_max nodes has <= n_max - 1 edges
}

edge_table edge_table::with_slot_count(std::uint64_t n_max, std::uint64_t m,
                                       std::uint64_t slot_count) {
    validate_dimensions(n_max, m);
    if (slot_count == 0)
        raise(errc::invalid_parameter, "slot count must be >= 1");
    std::uint64_t keys = n_max * m;
    if (keys > id_limit)
        raise(errc::invalid_parameter, "saturation table needs n_max*m to fit 32-bit pool links");
    edge_table t;
    t.slot_count_ = slot_count;
    t.n_max_ = static_cast<std::uint32_t>(n_max);
    t.m_ = static_cast<std::uint32_t>(m);
    t.alpha_ = static_cast<double>(n_max - 1) / static_cast<double>(slot_count);
    t.init_storage(keys);
    return t;
}

void edge_table::init_storage(std::uint64_t entries) {
    slots_.assign(slot_count_, npos);
    pool_.resize(entries);
    // Thread the whole pool onto the free list, ascending.
    free_head_ = entries == 0 ? npos : 0;
    for (std::uint64_t i = 0; i < entries; ++i)
        pool_[i].next = (i + 1 < entries) ? static_cast<std::uint32_t>(i + 1) : npos;
    slot_cap0_ = slots_.capacity();
    pool_cap0_ = pool_.capacity();
}

void edge_table::check_key(edge_key k) const {
    if (k.x >= n_max_ || k.y >= m_)
        raise(errc::key_out_of_range,
              "edge key (" + std::to_string(k.x) + ", " + std::to_string(k.y) +
                  ") outside [0, " + std::to_string(n_max_) + ") x [0, " + std::to_string(m_) + ")");
}

void edge_table::note_mutation() noexcept {
    if (slots_.capacity() != slot_cap0_ || pool_.capacity() != pool_cap0_) {
        ++allocation_events_;
        slot_cap0_ = slots_.capacity();
        pool_cap0_ = pool_.capacity();
    }
}

std::optional<node_id> edge_table::find(edge_key k, std::uint64_t* probes) const {
    check_key(k);
    for (std::uint32_t i = slots_[hash(k)]; i != npos; i = pool_[i].next) {
        if (probes)
            ++*probes;
        if (pool_[i].key == k)
            return pool_[i].child;
    }
    return std::nullopt;
}

void edge_table::insert(edge_key k, node_id child, std::uint64_t* probes) {
    check_key(k);
    if (child == 0)
        raise(errc::value_is_root, "no edge may point to the root (edge value 0)");
    if (child >= n_max_)
        raise(errc::invalid_parameter,
              "edge value " + std::to_string(child) + " outside (0, " + std::to_string(n_max_) + ")");

    std::uint64_t slot = hash(k);
    // The duplicate scan doubles as the walk to the chain tail, so appending
    // preserves insertion order without a tail pointer.
    std::uint32_t* link = &slots_[slot];
    while (*link != npos) {
        if (probes)
            ++*probes;
        if (pool_[*link].key == k)
            raise(errc::duplicate_key,
                  "edge key (" + std::to_string(k.x) + ", " + std::to_string(k.y) + ") already stored");
        link = &pool_[*link].next;
    }
    if (free_head_ == npos)
        raise(errc::table_full,
              "edge table holds its capacity of " + std::to_string(pool_.size()) + " edges");

    std::uint32_t idx = free_head_;
    free_head_ = pool_[idx].next;
    pool_[idx] = entry{k, child, npos};
    *link = idx;
    ++size_;
    note_mutation();
}

void edge_table::erase(edge_key k, std::uint64_t* probes) {
    check_key(k);
    std::uint32_t* link = &slots_[hash(k)];
    while (*link != npos) {
        if (probes)
            ++*probes;
        std::uint32_t idx = *link;
        if (pool_[idx].key == k) {
            *link = pool_[idx].next;
            pool_[idx].next = free_head_;
            free_head_ = idx;
            --size_;
            note_mutation();
            return;
        }
        link = &pool_[idx].next;
    }
    raise(errc::key_not_found,
          "edge key (" + std::to_string(k.x) + ", " + std::to_string(k.y) + ") not stored");
}

std::vector<std::size_t> edge_table::bucket_occupancies() const {
    std::vector<std::size_t> occ(slot_count_, 0);
    for (std::uint64_t s = 0; s < slot_count_; ++s)
        for (std::uint32_t i = slots_[s]; i != npos; i = pool_[i].next)
            ++occ[s];
    return occ;
}

std::size_t edge_table::footprint_bytes() const noexcept {
    return slots_.size() * sizeof(std::uint32_t) + pool_.size() * sizeof(entry);
}

} // namespace coordtrie
