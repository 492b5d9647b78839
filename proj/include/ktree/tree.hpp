#pragma once

#include <cstdint>
#include <vector>

#include "ktree/bigint.hpp"
#include "ktree/kvalue.hpp"

namespace ktree {

/// Inclusive range [lo, hi] of the children of one node. For n ≥ 1 the size
/// is ⌊k⌋ or ⌈k⌉; for n = 0 it is ⌈k⌉ and includes the root itself.
struct ChildRange {
    BigInt lo;
    BigInt hi;

    BigInt count() const { return hi - lo + 1; }
    bool contains(const BigInt& c) const { return lo <= c && c <= hi; }
};

/// ⌊n/k⌋; the root is its own parent (parent(0) = 0).
BigInt parent(const BigInt& n, const KValue& k);

/// [⌈n·k⌉, ⌈(n+1)·k⌉ − 1]; for n = 0 this is [0, ⌈k⌉ − 1].
ChildRange children(const BigInt& n, const KValue& k);

/// h(n) = |children(n)|, by range width. Debug builds cross-check the
/// count-indicator classification for exact k.
BigInt child_count(const BigInt& n, const KValue& k);

/// Number of parent steps to reach the root, depth(0) = 0.
int depth(const BigInt& n, const KValue& k);

inline constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

/// All rows of the k-tree down to max_depth: rows[d] is the sorted list of
/// nodes at depth d.
struct TreeSlice {
    KValue k;
    int max_depth = 0;
    std::vector<std::vector<BigInt>> rows;

    std::uint64_t node_count() const;
};

/// Breadth-first enumeration of every node with depth ≤ max_depth.
/// Throws SizeLimit once more than node_cap nodes would be materialized.
TreeSlice build_slice(const KValue& k, int max_depth,
                      std::uint64_t node_cap = kDefaultNodeCap);

}  // namespace ktree
