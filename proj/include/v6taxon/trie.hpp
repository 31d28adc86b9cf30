#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "v6taxon/address.hpp"

namespace v6taxon {

// n_p for p = 0..128.
struct AggregateCounts {
    std::array<uint64_t, 129> n{};

    uint64_t total() const { return n[128]; }
};

// Minimum density n / 2^(128-p): prefixes of length p containing at least
// n observed addresses. p is capped at 127.
struct DensityClass {
    uint64_t n = 2;
    int p = 0;
};

struct DenseEntry {
    Prefix prefix;
    uint64_t count = 0;  // distinct contained addresses
    uint64_t hits = 0;   // accumulated insert weight
};

struct DensePrefixReport {
    DensityClass cls;
    std::vector<DenseEntry> entries;  // disjoint, prefix numeric order
};

// Path-compressed binary radix trie over 128-bit keys.
class CountingTrie {
public:
    CountingTrie() = default;

    void insert(const Address& a, uint64_t weight = 1);

    uint64_t total_weight() const { return total_weight_; }
    uint64_t distinct_count() const { return root_ ? root_->distinct : 0; }

    AggregateCounts aggregate_counts() const;  // throws on empty trie

    // Least-specific, non-overlapping prefixes of length >= cls.p whose
    // distinct-address count >= cls.n.
    DensePrefixReport densify(const DensityClass& cls) const;

    // Sum of leaf weights; equals total_weight() by construction.
    uint64_t leaf_weight_sum() const;

private:
    struct Node {
        Address base;
        uint8_t len = 0;
        uint64_t weight = 0;    // nonzero only at /128 leaves
        uint64_t distinct = 0;  // distinct addresses in subtree
        std::unique_ptr<Node> child[2];
    };
    std::unique_ptr<Node> root_;
    uint64_t total_weight_ = 0;

    void densify_visit(const Node& node, int parent_len, const DensityClass& cls,
                       std::vector<DenseEntry>& out) const;
    static void count_visit(const Node& node, int parent_len, AggregateCounts& out);
    static uint64_t leaf_sum(const Node& node);
};

// n_p for all p from a sorted, deduplicated address span.
// Throws std::invalid_argument on empty input.
AggregateCounts aggregate_counts(std::span<const Address> sorted_unique);

// Exactly the length-cls.p prefixes containing >= cls.n distinct addresses.
DensePrefixReport dense_fixed_length(std::span<const Address> sorted_unique,
                                     const DensityClass& cls);

}  // namespace v6taxon
