#pragma once

#include <utility>
#include <vector>

#include "ktree/bigint.hpp"
#include "ktree/golden.hpp"
#include "ktree/kvalue.hpp"
#include "ktree/quadreal.hpp"

namespace ktree {

/// Which side of the indicator partition a value falls on:
/// floor-range (0, 1−{k}] vs ceil-range {0} ∪ (1−{k}, 1).
enum class RangeClass { Floor, Ceil };

/// {n·k} ∈ [0, 1) for n ≥ 1; exact k only.
QuadReal count_indicator(const BigInt& n, const KValue& k);

/// Floor iff 0 < x ≤ 1 − {k}; Ceil otherwise (including x = 0).
RangeClass classify(const QuadReal& x, const KValue& k);

/// h(n) via the indicator classification, as opposed to counting the
/// children range.
BigInt predicted_child_count(const BigInt& n, const KValue& k);

/// Count indicator of the i-th smallest child of any node whose indicator is
/// x: {(i − x)·b/k}. Valid for any (a, b) with a ≥ 1, a²+4b ≥ 0 and k ≥ 1.
/// Throws ChildAbsent when i = ⌈k⌉ ≠ ⌊k⌋ and x lies in the floor-range.
QuadReal child_indicator(int i, const QuadReal& x, const GoldenParams& params);

/// One line of the child-count indicator graph: x ↦ {(i − x)·b/k}. The last
/// line (i = ⌈k⌉ when k is not an integer) only exists on the ceil-range.
struct IndicatorLine {
    int index = 1;
    GoldenParams params;
    bool restricted = false;

    QuadReal eval(const QuadReal& x) const { return child_indicator(index, x, params); }
};

std::vector<IndicatorLine> cci_lines(const GoldenParams& params);

/// Empirical companion for arbitrary exact k: pairs
/// (count_indicator(n), count_indicator(first child of n)) for n = 1..n_max.
std::vector<std::pair<QuadReal, QuadReal>> indicator_scatter(const KValue& k, long n_max);

/// Per-sample number of child-indicator lines landing in the wrap zone:
/// [1−{k}, 1) for b ≥ 0, (0, 1−{k}] for b < 0, counting only children that
/// exist at that sample. The half-open windows match the half-open existence
/// boundary of the ⌈k⌉-th child, so the count stays constant even at
/// boundary-exact samples. The verdict is true iff every count equals |b|.
/// Requires 1−a ≤ b ≤ a−1.
struct GrandparentReport {
    GoldenParams params;
    BigInt expected;
    bool verdict = false;
    std::vector<std::pair<QuadReal, BigInt>> counts;
};

GrandparentReport grandparent_count(const GoldenParams& params,
                                    const std::vector<QuadReal>& samples);

/// The midpoint sample grid (2j+1)/(2n), j = 0..n−1 — n points strictly
/// inside (0, 1).
std::vector<QuadReal> midpoint_grid(int n);

}  // namespace ktree
