#include "ktree/decimal.hpp"

#include <sstream>

namespace ktree {

std::string decimal_string(const BigRat& v, unsigned frac_digits, RoundDir dir) {
    const BigInt scale = pow10(frac_digits);
    const BigRat scaled = v * scale;
    BigInt units;
    switch (dir) {
        case RoundDir::Down: units = floor_rat(scaled); break;
        case RoundDir::Up: units = ceil_rat(scaled); break;
        case RoundDir::Nearest: units = floor_rat(scaled + BigRat(1, 2)); break;
    }
    const bool neg = units < 0;
    BigInt mag = abs(units);
    const BigInt whole = mag / scale;
    const BigInt frac = mag % scale;

    std::ostringstream out;
    if (neg) out << "-";
    out << whole;
    if (frac_digits > 0) {
        std::string digits = frac.str();
        out << "." << std::string(frac_digits - digits.size(), '0') << digits;
    }
    return out.str();
}

std::string decimal_string(const QuadReal& v, unsigned frac_digits, RoundDir dir) {
    // Bound the value tighter than the rendering resolution, then round the
    // matching rational endpoint.
    const unsigned guard = frac_digits + 10;
    switch (dir) {
        case RoundDir::Down: return decimal_string(v.lower_rational(guard), frac_digits, dir);
        case RoundDir::Up: return decimal_string(v.upper_rational(guard), frac_digits, dir);
        case RoundDir::Nearest:
            return decimal_string(v.lower_rational(guard), frac_digits, dir);
    }
    return {};
}

}  // namespace ktree
