#pragma once

#include <optional>
#include <vector>

#include "ktree/bigint.hpp"
#include "ktree/golden.hpp"
#include "ktree/kvalue.hpp"
#include "ktree/tree.hpp"

namespace ktree {

/// The leftmost-node sequence f and the row-length sequence r of one k-tree:
/// f_0 = 1, f_{i+1} = ⌈k·f_i⌉; r_0 = 1, r_d = f_d − f_{d−1}.
struct RowTable {
    KValue k;
    std::vector<BigInt> f;
    std::vector<BigInt> r;
};

/// [f_0, ..., f_depth] with exact ceilings.
std::vector<BigInt> leftmost_sequence(const KValue& k, int depth);

/// [r_0, ..., r_depth] derived from the leftmost sequence.
std::vector<BigInt> row_lengths(const KValue& k, int depth);

RowTable make_row_table(const KValue& k, int depth);

/// Independent oracle: counts nodes per depth by breadth-first expansion of
/// children ranges, never touching the f-sequence.
std::vector<BigInt> brute_force_row_lengths(const KValue& k, int depth,
                                            std::uint64_t node_cap = kDefaultNodeCap);

struct RecurrenceReport {
    GoldenParams params;
    int depth = 0;
    bool holds = false;
    /// Smallest index d where r_d deviates (1 means the r_1 base case failed).
    std::optional<int> first_failure;
    BigInt base_r0;
    BigInt base_r1;
};

/// Checks r_0 = 1, r_1 = ⌈k⌉ − 1 and r_d = a·r_{d−1} + b·r_{d−2} for
/// 2 ≤ d ≤ depth against exact enumeration. Requires the recurrence range
/// 1−a < b < 1+a and depth ≥ 2.
RecurrenceReport verify_recurrence(const GoldenParams& params, int depth);

/// The pure check behind verify_recurrence: examines a given row-length
/// sequence against the recurrence and the stated base (r_0 = 1,
/// r_1 = expected_r1).
RecurrenceReport check_recurrence(const GoldenParams& params,
                                  const std::vector<BigInt>& rows,
                                  const BigInt& expected_r1);

/// Closed-form r_d, evaluated exactly in the quadratic field:
///   b > 0:  (k₁^{d+1} − k₂^{d+1}) / √(a²+4b)
///   b < 0:  ((k₁−1)·k₁^d − (k₂−1)·k₂^d) / √(a²+4b)
///   b = 0:  k^{d−1}(k−1) with r_0 = 1
/// where k₂ is the conjugate root of x² = a·x + b. Throws NonIntegerResult if
/// the field arithmetic does not collapse to a rational integer.
BigInt closed_form_row(const GoldenParams& params, int d);

}  // namespace ktree
