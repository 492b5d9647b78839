#pragma once

#include <compare>
#include <string>

#include "ktree/bigint.hpp"

namespace ktree {

/// An element (p + q·√d)/r of a real quadratic field (or of ℚ when q = 0).
///
/// Canonical form invariants, established by every constructor:
///   * r > 0,
///   * gcd(p, q, r) = 1,
///   * d is squarefree and d ≥ 2 when q ≠ 0; otherwise q = 0 and d = 0
///     (perfect-square radicands collapse to the rational representation).
/// Equality of canonical forms is structural equality.
///
/// Arithmetic is defined within a single field: operands must be rational or
/// share the same radicand. Comparison is exact and works across radicands.
/// Values are immutable; the type is safe to share between threads.
class QuadReal {
public:
    QuadReal() : p_(0), q_(0), d_(0), r_(1) {}
    explicit QuadReal(BigInt n) : p_(std::move(n)), q_(0), d_(0), r_(1) {}
    explicit QuadReal(long long n) : QuadReal(BigInt(n)) {}
    explicit QuadReal(const BigRat& v) : p_(numerator(v)), q_(0), d_(0), r_(denominator(v)) {}

    /// General constructor; normalizes (p + q·√d)/r to canonical form.
    /// Throws InvalidParams on r = 0 or d < 0.
    QuadReal(BigInt p, BigInt q, BigInt d, BigInt r);

    static QuadReal sqrt_of(const BigInt& d) { return QuadReal(0, 1, d, 1); }

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& d() const { return d_; }
    const BigInt& r() const { return r_; }

    bool is_rational() const { return q_ == 0; }
    bool is_integer() const { return q_ == 0 && r_ == 1; }
    bool is_zero() const { return q_ == 0 && p_ == 0; }

    /// Requires is_rational().
    BigRat rational_value() const;

    int sign() const;
    BigInt floor() const;
    BigInt ceil() const;
    /// x − ⌊x⌋ ∈ [0, 1), also for negative x.
    QuadReal frac() const;

    QuadReal conjugate() const { return raw(p_, -q_, d_, r_); }
    QuadReal inverse() const;
    QuadReal pow(unsigned e) const;
    QuadReal abs() const { return sign() < 0 ? -*this : *this; }

    QuadReal operator-() const { return raw(-p_, -q_, d_, r_); }
    friend QuadReal operator+(const QuadReal& a, const QuadReal& b);
    friend QuadReal operator-(const QuadReal& a, const QuadReal& b);
    friend QuadReal operator*(const QuadReal& a, const QuadReal& b);
    friend QuadReal operator/(const QuadReal& a, const QuadReal& b);

    /// Exact three-way comparison of real values, across radicands.
    int compare(const QuadReal& o) const;
    friend bool operator==(const QuadReal& a, const QuadReal& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_ && a.r_ == b.r_;
    }
    friend std::strong_ordering operator<=>(const QuadReal& a, const QuadReal& b) {
        const int c = a.compare(b);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// Exact rational bound within 10^-digits of the value.
    BigRat lower_rational(unsigned digits) const;
    BigRat upper_rational(unsigned digits) const;

    /// Display-quality double; never used for exact decisions.
    double approx() const;

    /// "(p+q*sqrt(d))/r" with the obvious simplifications.
    std::string str() const;

private:
    static QuadReal raw(BigInt p, BigInt q, BigInt d, BigInt r);
    void normalize();

    BigInt p_, q_, d_, r_;
};

/// Sign of p + q·√d for d ≥ 0, by integer squaring.
int sign_pqd(const BigInt& p, const BigInt& q, const BigInt& d);

}  // namespace ktree
