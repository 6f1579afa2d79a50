#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace mbcount {

// Arbitrary-precision signed integer. All counts are nonnegative, but the
// partial sums of the inclusion-exclusion DAG recurrence alternate in sign,
// so the type must carry one.
using ExactCount = boost::multiprecision::cpp_int;

// Exact quotient of two counts. Numerator and denominator are kept exactly
// as constructed (not reduced to lowest terms); comparisons cross-multiply,
// which is sign-safe because the denominator is always positive.
struct ExactRatio {
  ExactCount numerator;
  ExactCount denominator;

  ExactRatio(ExactCount num, ExactCount den)
      : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator <= 0)
      throw std::domain_error("ExactRatio: denominator must be positive");
  }

  bool is_integer() const { return numerator % denominator == 0; }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }

  friend std::strong_ordering operator<=>(const ExactRatio& a,
                                          const ExactRatio& b) {
    ExactCount lhs = a.numerator * b.denominator;
    ExactCount rhs = b.numerator * a.denominator;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

// Tallies of big-integer work done through one memo table. terms_evaluated
// counts summands actually computed: reads that hit the DAG-count cache do
// not tick, so per-n term counts assume a warm cache (see bn_count).
struct OpCounter {
  std::uint64_t big_multiplications = 0;
  std::uint64_t big_additions = 0;
  std::uint64_t terms_evaluated = 0;

  void reset() { *this = OpCounter{}; }
};

}  // namespace mbcount
