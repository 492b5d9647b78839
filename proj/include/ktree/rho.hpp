#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktree/bigint.hpp"
#include "ktree/golden.hpp"
#include "ktree/kvalue.hpp"
#include "ktree/quadreal.hpp"

namespace ktree {

/// Rigorous interval enclosures of c(k) and ρ(k) = (k−1)/k · c(k) after
/// n_iters steps of the f-sequence:
///   c_lo = f_n/k^n (the sequence is nondecreasing),
///   c_hi = c_lo + k^{−n}/(k−1) (geometric tail bound).
/// Endpoints are exact rationals. For rational k they are computed exactly,
/// so c_hi − c_lo = k^{−n}/(k−1) holds with equality; for quadratic k they
/// are rounded outward at 50 guard digits.
struct RhoEnclosure {
    KValue k;
    int n_iters = 0;
    BigRat c_lo, c_hi;
    BigRat rho_lo, rho_hi;
};

inline constexpr unsigned kEnclosureGuardDigits = 50;

RhoEnclosure enclose_c(const KValue& k, int n_iters);

/// Exact ρ(k) for golden parameters in the recurrence range 1−a < b < 1+a:
///   b > 0: k/√(a²+4b),  b < 0: (k−1)/√(a²+4b),  b = 0: (a−1)/a.
QuadReal closed_rho(const GoldenParams& params);

struct SweepPoint {
    BigRat k;
    std::optional<RhoEnclosure> enclosure;
    std::string error;  // empty on success
};

/// Enclosures on the evenly spaced rational grid from k_min to k_max
/// (inclusive, num_points points). Failed points carry their error message
/// instead of being dropped. Output is ordered by k.
std::vector<SweepPoint> sweep(const BigRat& k_min, const BigRat& k_max, int num_points,
                              int n_iters);

/// One row of a Josephus-point probe. side is −1 (k₀−ε), 0 (at k₀) or +1
/// (k₀+ε); the ratio columns bound c(k₀±ε)/c(k₀) by interval division.
struct JosephusRow {
    int side = 0;
    std::optional<BigRat> epsilon;
    BigRat k;
    RhoEnclosure enclosure;
    std::optional<BigRat> ratio_lo, ratio_hi;
};

struct JosephusReport {
    long long q = 2;
    BigRat point;  // q/(q−1)
    int n_iters = 0;
    std::vector<JosephusRow> rows;
};

/// Enclosures at k₀ = q/(q−1) and at k₀ ± ε for each ε, with ratio bounds
/// against the at-point enclosure. Asserts nothing about the jump itself.
JosephusReport josephus_probe(long long q, const std::vector<BigRat>& epsilons,
                              int n_iters);

}  // namespace ktree
