#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ktree {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Decimal string (optional sign) to BigInt. Unlike the cpp_int constructor,
/// leading zeros never trigger octal interpretation.
inline BigInt bigint_from_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("bigint_from_decimal: empty digits");
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    for (char c : s)
        if (c < '0' || c > '9')
            throw std::invalid_argument("bigint_from_decimal: not a decimal integer");
    BigInt v{std::string(s)};
    return neg ? -v : v;
}

/// Floor division for arbitrary signs, denominator > 0.
inline BigInt floor_div_int(const BigInt& a, const BigInt& b) {
    if (b <= 0) throw std::domain_error("floor_div_int: denominator must be positive");
    BigInt q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline BigInt ceil_div_int(const BigInt& a, const BigInt& b) {
    if (b <= 0) throw std::domain_error("ceil_div_int: denominator must be positive");
    BigInt q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

/// ⌊√n⌋ by Newton iteration from an over-estimate; exact floor semantics.
inline BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    if (n == 0) return 0;
    const unsigned bits = boost::multiprecision::msb(n);
    BigInt x = BigInt(1) << (bits / 2 + 1);  // x > sqrt(n)
    for (;;) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }
    return x;
}

inline BigInt isqrt_ceil(const BigInt& n) {
    BigInt s = isqrt_floor(n);
    if (s * s != n) ++s;
    return s;
}

inline bool is_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt s = isqrt_floor(n);
    if (s * s != n) return false;
    if (root) *root = std::move(s);
    return true;
}

inline BigInt pow10(unsigned digits) {
    BigInt t = 1;
    for (unsigned i = 0; i < digits; ++i) t *= 10;
    return t;
}

inline BigInt floor_rat(const BigRat& v) {
    return floor_div_int(numerator(v), denominator(v));
}

inline BigInt ceil_rat(const BigRat& v) {
    return ceil_div_int(numerator(v), denominator(v));
}

}  // namespace ktree
