#pragma once

#include "mbcount/exact.hpp"

#include <string>
#include <string_view>

namespace mbcount {

// Renders a ratio with the given number of significant digits, rounding
// half-to-even on the digit after the last kept one. Exactly-integer ratios
// render as "N.0". When the integer part alone has at least sig_digits
// digits, the result is an integer string with the low digits zeroed.
std::string render_decimal(const ExactRatio& value, int sig_digits);

// Renders v >= 1 as D.DDDDDDE+XXX with the requested number of digits after
// the point (round half to even) and an at-least-three-digit exponent.
// Values below 1 throw std::domain_error.
std::string render_scientific(const ExactCount& value, int decimal_places);

// Inserts comma thousands separators into the integer part of a plain
// decimal string ("4564381.36751" -> "4,564,381.36751").
std::string group_thousands(std::string_view text);

}  // namespace mbcount
