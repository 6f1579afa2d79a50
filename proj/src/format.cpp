#include "mbcount/format.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mbcount {
namespace {

ExactCount pow10(long long exponent) {
  return boost::multiprecision::pow(ExactCount(10),
                                    static_cast<unsigned>(exponent));
}

// floor(num/den) rounded half to even on the remainder; num, den > 0.
ExactCount div_round_half_even(const ExactCount& num, const ExactCount& den) {
  ExactCount quotient, remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  ExactCount twice = remainder * 2;
  if (twice > den || (twice == den && (quotient & 1) != 0))
    ++quotient;
  return quotient;
}

}  // namespace

std::string render_decimal(const ExactRatio& value, int sig_digits) {
  if (sig_digits < 1)
    throw std::domain_error("render_decimal: sig_digits must be at least 1");

  ExactCount num = value.numerator;
  const ExactCount& den = value.denominator;
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }

  if (num % den == 0)
    return sign + ExactCount(num / den).str() + ".0";

  ExactCount integer_part = num / den;
  if (integer_part > 0) {
    int int_digits = static_cast<int>(integer_part.str().size());
    if (int_digits >= sig_digits) {
      // All the significance is left of the point: round there and zero the
      // rest; no decimal point since no fractional digit survives.
      ExactCount scale = pow10(int_digits - sig_digits);
      ExactCount rounded = div_round_half_even(num, den * scale) * scale;
      return sign + rounded.str();
    }
    int fraction_digits = sig_digits - int_digits;
    ExactCount scaled = div_round_half_even(num * pow10(fraction_digits), den);
    std::string digits = scaled.str();
    if (digits.size() > static_cast<std::size_t>(int_digits + fraction_digits)) {
      // Rounding carried into a new leading digit, so the value is exactly a
      // power of ten; drop one (zero) fraction digit to keep sig_digits.
      digits.pop_back();
      --fraction_digits;
      if (fraction_digits == 0)
        return sign + digits;
    }
    std::size_t split = digits.size() - static_cast<std::size_t>(fraction_digits);
    return sign + digits.substr(0, split) + "." + digits.substr(split);
  }

  // Value below 1: significant digits start after the leading zeros.
  int leading_zeros = 0;
  ExactCount probe = num * 10;
  while (probe < den) {
    probe *= 10;
    ++leading_zeros;
  }
  int fraction_digits = sig_digits + leading_zeros;
  ExactCount scaled = div_round_half_even(num * pow10(fraction_digits), den);
  std::string digits = scaled.str();
  if (digits.size() > static_cast<std::size_t>(sig_digits)) {
    // Carried up a decade: one leading zero fewer, one digit fewer kept.
    digits.pop_back();
    --fraction_digits;
    if (fraction_digits == 0)
      return sign + digits;
  }
  if (digits.size() < static_cast<std::size_t>(fraction_digits))
    digits.insert(0, static_cast<std::size_t>(fraction_digits) - digits.size(),
                  '0');
  return sign + "0." + digits;
}

std::string render_scientific(const ExactCount& value, int decimal_places) {
  if (decimal_places < 0)
    throw std::domain_error(
        "render_scientific: decimal_places must be nonnegative");
  if (value < 1)
    throw std::domain_error("render_scientific: value must be at least 1");

  std::string digits = value.str();
  int mantissa_len = decimal_places + 1;
  int exponent = static_cast<int>(digits.size()) - 1;

  std::string mantissa;
  if (static_cast<int>(digits.size()) <= mantissa_len) {
    mantissa = digits + std::string(
        static_cast<std::size_t>(mantissa_len) - digits.size(), '0');
  } else {
    ExactCount rounded = div_round_half_even(
        value, pow10(static_cast<long long>(digits.size()) - mantissa_len));
    mantissa = rounded.str();
    if (static_cast<int>(mantissa.size()) > mantissa_len) {
      mantissa.pop_back();  // rounding carried into a new leading digit
      ++exponent;
    }
  }

  std::ostringstream out;
  out << mantissa[0];
  if (decimal_places > 0)
    out << '.' << mantissa.substr(1);
  out << 'E' << '+';
  std::string exp_digits = std::to_string(exponent);
  if (exp_digits.size() < 3)
    exp_digits.insert(0, 3 - exp_digits.size(), '0');
  out << exp_digits;
  return out.str();
}

std::string group_thousands(std::string_view text) {
  std::size_t int_end = text.find('.');
  if (int_end == std::string_view::npos)
    int_end = text.size();
  std::size_t int_begin = (!text.empty() && text.front() == '-') ? 1 : 0;

  std::string out(text.substr(0, int_begin));
  std::size_t int_len = int_end - int_begin;
  for (std::size_t i = 0; i < int_len; ++i) {
    if (i != 0 && (int_len - i) % 3 == 0)
      out += ',';
    out += text[int_begin + i];
  }
  out += text.substr(int_end);
  return out;
}

}  // namespace mbcount
