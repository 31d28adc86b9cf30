#include "v6taxon/trie.hpp"

#include <algorithm>
#include <stdexcept>

namespace v6taxon {

namespace {

struct InsertResult {
    bool added_new;
};

}  // namespace

void CountingTrie::insert(const Address& a, uint64_t weight) {
    total_weight_ += weight;
    if (!root_) {
        root_ = std::make_unique<Node>();
        root_->base = a;
        root_->len = 128;
        root_->weight = weight;
        root_->distinct = 1;
        return;
    }

    // Recursive descent; distinct counters are fixed up on unwind.
    struct Rec {
        static bool go(std::unique_ptr<Node>& slot, const Address& a, uint64_t w) {
            Node* cur = slot.get();
            int cpl = std::min(common_prefix_len(a, cur->base), int(cur->len));
            if (cpl < cur->len) {
                auto leaf = std::make_unique<Node>();
                leaf->base = a;
                leaf->len = 128;
                leaf->weight = w;
                leaf->distinct = 1;

                auto split = std::make_unique<Node>();
                split->base = a.masked(cpl);
                split->len = uint8_t(cpl);
                bool bit = a.bit(cpl);
                split->child[bit] = std::move(leaf);
                split->child[!bit] = std::move(slot);
                split->distinct = split->child[0]->distinct + split->child[1]->distinct;
                slot = std::move(split);
                return true;
            }
            if (cur->len == 128) {
                cur->weight += w;  // duplicate address
                return false;
            }
            bool bit = a.bit(cur->len);
            if (!cur->child[bit]) {
                auto leaf = std::make_unique<Node>();
                leaf->base = a;
                leaf->len = 128;
                leaf->weight = w;
                leaf->distinct = 1;
                cur->child[bit] = std::move(leaf);
                cur->distinct++;
                return true;
            }
            bool added = go(cur->child[bit], a, w);
            if (added) cur->distinct++;
            return added;
        }
    };
    Rec::go(root_, a, weight);
}

void CountingTrie::count_visit(const Node& node, int parent_len, AggregateCounts& out) {
    for (int p = parent_len + 1; p <= node.len; p++) out.n[size_t(p)]++;
    for (const auto& c : node.child)
        if (c) count_visit(*c, node.len, out);
}

AggregateCounts CountingTrie::aggregate_counts() const {
    if (!root_) throw std::invalid_argument("aggregate counts of an empty trie");
    AggregateCounts out;
    count_visit(*root_, -1, out);
    return out;
}

void CountingTrie::densify_visit(const Node& node, int parent_len, const DensityClass& cls,
                                 std::vector<DenseEntry>& out) const {
    if (node.distinct < cls.n) return;
    if (cls.p <= node.len) {
        int len = std::max(cls.p, parent_len + 1);
        if (len <= 127)
            out.push_back({prefix_of(node.base, len), node.distinct, leaf_sum(node)});
        return;
    }
    for (const auto& c : node.child)
        if (c) densify_visit(*c, node.len, cls, out);
}

DensePrefixReport CountingTrie::densify(const DensityClass& cls) const {
    DensePrefixReport report;
    report.cls = cls;
    if (root_) densify_visit(*root_, -1, cls, report.entries);
    return report;
}

uint64_t CountingTrie::leaf_sum(const Node& node) {
    uint64_t s = node.weight;
    for (const auto& c : node.child)
        if (c) s += leaf_sum(*c);
    return s;
}

uint64_t CountingTrie::leaf_weight_sum() const {
    return root_ ? leaf_sum(*root_) : 0;
}

AggregateCounts aggregate_counts(std::span<const Address> sorted_unique) {
    if (sorted_unique.empty())
        throw std::invalid_argument("aggregate counts of an empty address set");
    // n_p = 1 + number of adjacent sorted pairs diverging before bit p.
    std::array<uint64_t, 129> diverge{};
    for (size_t i = 1; i < sorted_unique.size(); i++)
        diverge[size_t(common_prefix_len(sorted_unique[i - 1], sorted_unique[i]))]++;
    AggregateCounts out;
    uint64_t acc = 1;
    for (int p = 0; p <= 128; p++) {
        out.n[size_t(p)] = acc;
        if (p < 128) acc += diverge[size_t(p)];
    }
    return out;
}

DensePrefixReport dense_fixed_length(std::span<const Address> sorted_unique,
                                     const DensityClass& cls) {
    DensePrefixReport report;
    report.cls = cls;
    size_t i = 0;
    while (i < sorted_unique.size()) {
        Address base = sorted_unique[i].masked(cls.p);
        size_t j = i;
        while (j < sorted_unique.size() && sorted_unique[j].masked(cls.p) == base) j++;
        uint64_t count = j - i;
        if (count >= cls.n)
            report.entries.push_back({Prefix{base, uint8_t(cls.p)}, count, count});
        i = j;
    }
    return report;
}

}  // namespace v6taxon
