#include "ktree/tree.hpp"

#include <cassert>

#include "ktree/errors.hpp"
#include "ktree/indicator.hpp"

namespace ktree {

BigInt parent(const BigInt& n, const KValue& k) {
    if (n < 0) throw InvalidParams("parent: n must be nonnegative");
    if (n == 0) return 0;
    return floor_div(n, k);
}

ChildRange children(const BigInt& n, const KValue& k) {
    if (n < 0) throw InvalidParams("children: n must be nonnegative");
    // ⌈0·k⌉ = 0, so the same formula covers the root (whose range [0, ⌈k⌉−1]
    // contains the root itself).
    return ChildRange{ceil_scaled(n, k), ceil_scaled(n + 1, k) - 1};
}

BigInt child_count(const BigInt& n, const KValue& k) {
    const ChildRange range = children(n, k);
    BigInt h = range.count();
#ifndef NDEBUG
    if (k.is_exact() && n >= 1) assert(h == predicted_child_count(n, k));
#endif
    return h;
}

int depth(const BigInt& n, const KValue& k) {
    if (n < 0) throw InvalidParams("depth: n must be nonnegative");
    int steps = 0;
    BigInt cur = n;
    while (cur != 0) {
        cur = floor_div(cur, k);
        ++steps;
    }
    return steps;
}

std::uint64_t TreeSlice::node_count() const {
    std::uint64_t total = 0;
    for (const auto& row : rows) total += row.size();
    return total;
}

TreeSlice build_slice(const KValue& k, int max_depth, std::uint64_t node_cap) {
    if (max_depth < 0) throw InvalidParams("build_slice: max_depth must be nonnegative");
    TreeSlice slice{k, max_depth, {}};
    slice.rows.push_back({BigInt(0)});
    std::uint64_t total = 1;
    for (int d = 0; d < max_depth; ++d) {
        std::vector<BigInt> next;
        for (const BigInt& n : slice.rows.back()) {
            const ChildRange range = children(n, k);
            for (BigInt c = range.lo; c <= range.hi; ++c) {
                if (c == n) continue;  // the root's self-loop
                if (++total > node_cap)
                    throw SizeLimit("build_slice: node count exceeds cap of " +
                                    std::to_string(node_cap));
                next.push_back(c);
            }
        }
        slice.rows.push_back(std::move(next));
    }
    return slice;
}

}  // namespace ktree
