#pragma once

#include <string>

#include "ktree/bigint.hpp"
#include "ktree/quadreal.hpp"

namespace ktree {

enum class RoundDir { Down, Up, Nearest };

/// Fixed-point decimal rendering with the stated digit count after the point
/// and directed rounding. Locale-independent, '.' separator.
std::string decimal_string(const BigRat& v, unsigned frac_digits, RoundDir dir);
std::string decimal_string(const QuadReal& v, unsigned frac_digits, RoundDir dir);

}  // namespace ktree
