#pragma once

#include "ktree/bigint.hpp"
#include "ktree/kvalue.hpp"
#include "ktree/quadreal.hpp"

namespace ktree {

/// Integer pair (a, b) defining k = (a + √(a²+4b))/2, i.e. k² = a·k + b.
///
/// Different theorems need different parameter ranges, so validity is
/// per-operation:
///   * the recurrence r_d = a·r_{d−1} + b·r_{d−2} needs 1−a < b < 1+a,
///   * the grandparent line count needs 1−a ≤ b ≤ a−1,
///   * the child-indicator formula itself only needs a ≥ 1 and a²+4b ≥ 0.
struct GoldenParams {
    long long a = 1;
    long long b = 1;

    BigInt discriminant() const { return BigInt(a) * a + 4 * BigInt(b); }
    bool is_real() const { return a >= 1 && discriminant() >= 0; }

    bool in_recurrence_range() const { return a >= 1 && 1 - a < b && b < 1 + a; }
    bool in_grandparent_range() const { return a >= 1 && 1 - a <= b && b <= a - 1; }

    /// (a + √(a²+4b))/2 as a field element; requires is_real().
    QuadReal k_quad() const;
    /// Same value as a KValue; additionally requires k > 1.
    KValue k() const;

    friend bool operator==(const GoldenParams&, const GoldenParams&) = default;
};

}  // namespace ktree
