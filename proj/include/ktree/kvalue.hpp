#pragma once

#include <string>
#include <string_view>

#include "ktree/bigint.hpp"
#include "ktree/quadreal.hpp"

namespace ktree {

/// A real k > 1 in one of three representations:
///   * Rational — exact p/q,
///   * Quad     — exact quadratic irrational (QuadReal),
///   * Approx   — a decimal literal v trusted to ±1 ulp; the true value is
///     only known to lie in [v−u, v+u], and floor/ceil queries fail with
///     PrecisionExhausted when that interval does not determine the answer.
///
/// Exact variants support exact floor/ceil/compare/fractional parts.
/// Immutable after construction; safe to share between threads.
class KValue {
public:
    enum class Kind { Rational, Quad, Approx };

    static KValue from_rational(BigInt num, BigInt den);
    static KValue from_rational(const BigRat& v);
    /// Demotes to Rational when the value is rational.
    static KValue from_quad(QuadReal v);
    static KValue from_approx(std::string_view digits, unsigned guard_digits = 64);

    /// k-spec grammar: "p/q" | "quad:(p,q,D,r)" | "golden:a,b" | integer |
    /// decimal literal (Approx). Throws ParseError on malformed text and
    /// InvalidParams on values with k ≤ 1 (or non-real golden parameters).
    static KValue parse(std::string_view text);
    /// Round-trip spec string for this value.
    std::string spec() const;

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ != Kind::Approx; }

    const BigRat& rat() const;    // Rational kind only
    const QuadReal& quad() const; // Quad kind only

    /// Unified exact view; throws UnsupportedRepresentation for Approx.
    const QuadReal& as_quad() const;
    /// Cached exact 1/k; throws UnsupportedRepresentation for Approx.
    const QuadReal& quad_inverse() const;

    const BigRat& approx_value() const; // Approx kind only
    const BigRat& approx_ulp() const;   // Approx kind only
    unsigned guard_digits() const { return guard_; }

    /// Exact rational bounds: lower() ≤ k ≤ upper() (equal for Rational).
    BigRat lower() const;
    BigRat upper() const;

    BigInt floor_k() const;
    BigInt ceil_k() const;
    /// {k} as an exact value; UnsupportedRepresentation for Approx.
    QuadReal frac_k() const;

    double approx() const;

private:
    KValue() = default;

    Kind kind_ = Kind::Rational;
    BigRat rat_;
    QuadReal quad_;
    QuadReal quad_inv_;  // cached 1/k for Quad kind
    BigRat approx_v_, approx_u_;
    unsigned guard_ = 64;
    std::string literal_;
};

/// ⌊n·k⌋ for n ≥ 0, exact for exact k; PrecisionExhausted when an Approx
/// interval straddles an integer.
BigInt floor_scaled(const BigInt& n, const KValue& k);
/// ⌈n·k⌉ under the same contract.
BigInt ceil_scaled(const BigInt& n, const KValue& k);
/// ⌊n/k⌋ under the same contract.
BigInt floor_div(const BigInt& n, const KValue& k);
/// {n·k} ∈ [0, 1) as an exact field element; exact k only.
QuadReal frac_scaled(const BigInt& n, const KValue& k);

}  // namespace ktree
