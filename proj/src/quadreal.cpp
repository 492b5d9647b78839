#include "ktree/quadreal.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>
#include <utility>

#include "ktree/errors.hpp"

namespace ktree {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
    using boost::multiprecision::gcd;
    return gcd(gcd(abs(a), abs(b)), abs(c));
}

// Pulls the largest square factor it can find out of d: returns (s, d') with
// d = s²·d'. Trial division up to 10^6, then a perfect-square check on the
// cofactor; radicands with square prime factors beyond 10^12 stay unreduced,
// which is far outside this library's domain of use.
std::pair<BigInt, BigInt> extract_square(BigInt d) {
    BigInt s = 1;
    for (BigInt f = 2; f * f <= d && f <= 1'000'000; ++f) {
        const BigInt f2 = f * f;
        while (d % f2 == 0) {
            d /= f2;
            s *= f;
        }
    }
    BigInt root;
    if (is_square(d, &root)) {
        s *= root;
        d = 1;
    }
    return {std::move(s), std::move(d)};
}

}  // namespace

int sign_pqd(const BigInt& p, const BigInt& q, const BigInt& d) {
    if (q == 0 || d == 0) return p.sign();
    if (p == 0) return q.sign();
    if (p > 0 && q > 0) return 1;
    if (p < 0 && q < 0) return -1;
    // Opposite signs: the larger of |p| and |q|√d decides.
    const BigInt lhs = p * p;
    const BigInt rhs = q * q * d;
    if (lhs == rhs) return 0;
    return lhs > rhs ? p.sign() : q.sign();
}

QuadReal::QuadReal(BigInt p, BigInt q, BigInt d, BigInt r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    if (r_ == 0) throw InvalidParams("QuadReal: r must be nonzero");
    if (d_ < 0) throw InvalidParams("QuadReal: radicand must be nonnegative");
    normalize();
}

QuadReal QuadReal::raw(BigInt p, BigInt q, BigInt d, BigInt r) {
    QuadReal v;
    v.p_ = std::move(p);
    v.q_ = std::move(q);
    v.d_ = std::move(d);
    v.r_ = std::move(r);
    v.normalize();
    return v;
}

void QuadReal::normalize() {
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    if (d_ == 0) q_ = 0;
    if (q_ != 0) {
        auto [s, rest] = extract_square(d_);
        if (s != 1) {
            q_ *= s;
            d_ = rest;
        }
        if (d_ == 1) {  // √1 folds into the rational part
            p_ += q_;
            q_ = 0;
        }
    }
    if (q_ == 0) d_ = 0;
    const BigInt g = gcd3(p_, q_, r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

BigRat QuadReal::rational_value() const {
    if (!is_rational()) throw InvalidParams("QuadReal: not a rational value");
    return BigRat(p_, r_);
}

int QuadReal::sign() const { return sign_pqd(p_, q_, d_); }

BigInt QuadReal::floor() const {
    // ⌊(p + q√d)/r⌋ = ⌊(p + ⌊q√d⌋)/r⌋ since r > 0.
    BigInt s;
    if (q_ >= 0) {
        s = isqrt_floor(q_ * q_ * d_);
    } else {
        s = -isqrt_ceil(q_ * q_ * d_);
    }
    return floor_div_int(p_ + s, r_);
}

BigInt QuadReal::ceil() const { return -((-*this).floor()); }

QuadReal QuadReal::frac() const { return *this - QuadReal(floor()); }

QuadReal QuadReal::inverse() const {
    if (is_zero()) throw InvalidParams("QuadReal: division by zero");
    // 1 / ((p + q√d)/r) = r(p − q√d)/(p² − q²d)
    const BigInt norm = p_ * p_ - q_ * q_ * d_;
    return raw(r_ * p_, -r_ * q_, d_, norm);
}

QuadReal QuadReal::pow(unsigned e) const {
    QuadReal acc(BigInt(1));
    QuadReal base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

namespace {

// Lifts a and b to a common radicand; throws if they live in different fields.
BigInt common_radicand(const QuadReal& a, const QuadReal& b) {
    if (a.is_rational()) return b.d();
    if (b.is_rational()) return a.d();
    if (a.d() != b.d())
        throw InvalidParams("QuadReal: arithmetic across different radicands");
    return a.d();
}

}  // namespace

QuadReal operator+(const QuadReal& a, const QuadReal& b) {
    const BigInt d = common_radicand(a, b);
    return QuadReal::raw(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, d, a.r_ * b.r_);
}

QuadReal operator-(const QuadReal& a, const QuadReal& b) { return a + (-b); }

QuadReal operator*(const QuadReal& a, const QuadReal& b) {
    const BigInt d = common_radicand(a, b);
    return QuadReal::raw(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d,
                         a.r_ * b.r_);
}

QuadReal operator/(const QuadReal& a, const QuadReal& b) { return a * b.inverse(); }

int QuadReal::compare(const QuadReal& o) const {
    // Sign of U + V√d1 − W√d2 with everything cross-multiplied to a common
    // positive denominator.
    const BigInt U = p_ * o.r_ - o.p_ * r_;
    const BigInt V = q_ * o.r_;
    const BigInt W = o.q_ * r_;
    if (V == 0 && W == 0) return U.sign();
    if (W == 0) return sign_pqd(U, V, d_);
    if (V == 0) return sign_pqd(U, -W, o.d_);
    if (d_ == o.d_) return sign_pqd(U, V - W, d_);
    // Genuine cross-field comparison: let L = U + V√d1 and R = W√d2.
    const int sL = sign_pqd(U, V, d_);
    const int sR = W.sign();
    if (sL >= 0 && sR < 0) return 1;
    if (sL <= 0 && sR > 0) return -1;
    // L and R share a sign; compare L² vs R², one radical left.
    const int s2 = sign_pqd(U * U + V * V * d_ - W * W * o.d_, 2 * U * V, d_);
    return sL > 0 ? s2 : -s2;
}

BigRat QuadReal::lower_rational(unsigned digits) const {
    if (is_rational()) return rational_value();
    const BigInt scale = pow10(digits);
    // Bound q√d within 1/scale.
    BigInt lo;
    const BigInt target = q_ * q_ * d_ * scale * scale;
    if (q_ >= 0) {
        lo = isqrt_floor(target);
    } else {
        lo = -isqrt_ceil(target);
    }
    return BigRat(p_ * scale + lo, r_ * scale);
}

BigRat QuadReal::upper_rational(unsigned digits) const {
    if (is_rational()) return rational_value();
    const BigInt scale = pow10(digits);
    BigInt hi;
    const BigInt target = q_ * q_ * d_ * scale * scale;
    if (q_ >= 0) {
        hi = isqrt_ceil(target);
    } else {
        hi = -isqrt_floor(target);
    }
    return BigRat(p_ * scale + hi, r_ * scale);
}

double QuadReal::approx() const { return lower_rational(20).convert_to<double>(); }

std::string QuadReal::str() const {
    std::ostringstream out;
    if (is_rational()) {
        out << p_;
        if (r_ != 1) out << "/" << r_;
        return out.str();
    }
    const bool wrap = r_ != 1;
    if (wrap) out << "(";
    if (p_ != 0) out << p_;
    if (q_ == 1) {
        if (p_ != 0) out << "+";
    } else if (q_ == -1) {
        out << "-";
    } else {
        if (p_ != 0 && q_ > 0) out << "+";
        out << q_ << "*";
    }
    out << "sqrt(" << d_ << ")";
    if (wrap) out << ")/" << r_;
    return out.str();
}

}  // namespace ktree
