#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "coordtrie/error.hpp"
#include "coordtrie/types.hpp"

namespace coordtrie {

struct edge_key {
    node_id x;     // parent node
    symbol_id y;   // edge label
    bool operator==(const edge_key&) const = default;
};

/// Fixed-capacity separate-chaining hash table over edge keys, hashed by
/// h(x, y) = (x*m + y) mod H with H = max(1, ceil((n_max - 1) / alpha)).
///
/// Every byte the table will ever use is allocated in the constructor: an
/// H-slot head array plus a pool of n_max - 1 chain entries. Insert and
/// erase move entries between the pool free list and the buckets; nothing
/// is reallocated or resized afterwards.
///
/// Not internally synchronized: any number of concurrent readers OR one
/// exclusive writer.
class edge_table {
public:
    /// n_max and m must be in [1, 2^32 - 1] so that x*m + y fits the 64-bit
    /// hash lane; alpha must be a positive finite real.
    edge_table(std::uint64_t n_max, std::uint64_t m, double alpha);

    /// Verification-only variant: explicit slot count and the entry cap
    /// lifted to the full n_max*m key cross-product, so occupancy-bound
    /// checks can saturate every slot. Not for production tries.
    static edge_table with_slot_count(std::uint64_t n_max, std::uint64_t m,
                                      std::uint64_t slot_count);

    /// (x*m + y) mod H. No range check; callers validate keys.
    std::uint64_t hash(edge_key k) const noexcept {
        return (static_cast<std::uint64_t>(k.x) * m_ + k.y) % slot_count_;
    }

    /// Scans only bucket hash(k). If `probes` is given, adds one per chain
    /// entry visited.
    std::optional<node_id> find(edge_key k, std::uint64_t* probes = nullptr) const;

    /// Appends (k -> child) to bucket hash(k), keeping insertion order.
    void insert(edge_key k, node_id child, std::uint64_t* probes = nullptr);

    /// Splices the entry for k out of its chain and returns it to the pool.
    void erase(edge_key k, std::uint64_t* probes = nullptr);

    std::size_t size() const noexcept { return size_; }
    std::uint64_t slot_count() const noexcept { return slot_count_; }
    std::uint32_t node_capacity() const noexcept { return n_max_; }
    std::uint32_t alphabet_size() const noexcept { return m_; }
    double load_factor_target() const noexcept { return alpha_; }
    std::size_t entry_capacity() const noexcept { return pool_.size(); }

    /// occupancies[s] = entries stored in slot s; the sum equals size().
    std::vector<std::size_t> bucket_occupancies() const;

    /// Count of post-construction growth events of the slot array or entry
    /// pool. Stays 0 by construction; exposed so harnesses can assert it.
    std::size_t allocation_events() const noexcept { return allocation_events_; }

    /// Analytic footprint: slot heads + entry pool. Fixed at construction.
    std::size_t footprint_bytes() const noexcept;

private:
    struct entry {
        edge_key key;
        node_id child;
        std::uint32_t next; // pool index, npos = end of chain
    };
    static constexpr std::uint32_t npos = 0xFFFFFFFFu;

    edge_table() = default;

    void init_storage(std::uint64_t entries);
    void check_key(edge_key k) const;
    void note_mutation() noexcept;

    std::vector<std::uint32_t> slots_; // bucket heads (pool indices)
    std::vector<entry> pool_;
    std::uint32_t free_head_ = npos;
    std::size_t size_ = 0;
    std::uint64_t slot_count_ = 1;
    std::uint32_t n_max_ = 1;
    std::uint32_t m_ = 1;
    double alpha_ = 0.0;

    // baselines for the no-reallocation accounting
    std::size_t slot_cap0_ = 0;
    std::size_t pool_cap0_ = 0;
    std::size_t allocation_events_ = 0;
};

} // namespace coordtrie
