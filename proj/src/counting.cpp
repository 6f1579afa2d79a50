#include "mbcount/counting.hpp"

#include <cstddef>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace mbcount {
namespace {

// Factorials are shared by every multinomial, so cache them process-wide.
// Values are returned by copy; only the growth step needs the lock.
ExactCount factorial(long long k) {
  static std::mutex mu;
  static std::deque<ExactCount> cache{1};  // 0! = 1

  std::scoped_lock lock(mu);
  while (static_cast<long long>(cache.size()) <= k)
    cache.push_back(cache.back() * static_cast<long long>(cache.size()));
  return cache[static_cast<std::size_t>(k)];
}

ExactCount pow2(long long exponent) {
  return ExactCount(1) << exponent;
}

}  // namespace

ExactCount binomial(long long n, long long k) {
  if (n < 0 || k < 0)
    throw std::domain_error("binomial: arguments must be nonnegative");
  if (k > n)
    throw std::domain_error("binomial: k must not exceed n");
  return factorial(n) / (factorial(k) * factorial(n - k));
}

ExactCount multinomial3(long long n_p, long long n_c, long long n_so) {
  if (n_p < 0 || n_c < 0 || n_so < 0)
    throw std::domain_error("multinomial3: arguments must be nonnegative");
  return factorial(n_p + n_c + n_so) /
         (factorial(n_p) * factorial(n_c) * factorial(n_so));
}

const ExactCount& bn_count(long long n, MemoTable& memo) {
  if (n < 0)
    throw std::domain_error("bn_count: n must be nonnegative");

  auto& entries = memo.entries_;
  auto& ops = memo.ops_;
  for (auto m = static_cast<long long>(entries.size()); m <= n; ++m) {
    ExactCount sum = 0;
    for (long long k = 1; k <= m; ++k) {
      ExactCount term = binomial(m, k) * pow2(k * (m - k));
      term *= entries[static_cast<std::size_t>(m - k)];
      ops.big_multiplications += 2;
      if (k % 2 == 1)
        sum += term;
      else
        sum -= term;
      ops.big_additions += 1;
      ops.terms_evaluated += 1;
    }
    entries.push_back(std::move(sum));
  }
  return entries[static_cast<std::size_t>(n)];
}

ExactCount mb_partition_term(long long n, long long n_p, long long n_so,
                             MemoTable& memo) {
  if (n < 1)
    throw std::domain_error("mb_partition_term: n must be at least 1");
  if (n_p < 0 || n_so < 0 || n_p + n_so > n - 1)
    throw std::domain_error(
        "mb_partition_term: need n_p, n_so >= 0 and n_p + n_so <= n - 1");

  long long n_c = n - 1 - n_p - n_so;
  // Choose the roles, wire each child to any subset of parents and spouses,
  // then arrange the child-to-child arcs as an arbitrary DAG.
  ExactCount term = multinomial3(n_p, n_c, n_so);
  term *= pow2(n_c * n_p);
  term *= pow2(n_c * n_so);
  term *= bn_count(n_c, memo);
  memo.ops().big_multiplications += 3;
  memo.ops().terms_evaluated += 1;
  return term;
}

ExactCount mb_count(long long n, MemoTable& memo) {
  if (n < 1)
    throw std::domain_error("mb_count: n must be at least 1");

  bn_count(n - 1, memo);  // warm the DAG cache in one go
  ExactCount total = 0;
  for (long long n_p = 0; n_p <= n - 1; ++n_p) {
    for (long long n_so = 0; n_p + n_so <= n - 1; ++n_so) {
      total += mb_partition_term(n, n_p, n_so, memo);
      memo.ops().big_additions += 1;
    }
  }
  return total;
}

ExactRatio ratio(long long n, MemoTable& memo) {
  if (n < 1)
    throw std::domain_error("ratio: n must be at least 1");
  ExactCount bn = bn_count(n, memo);
  return ExactRatio(std::move(bn), mb_count(n, memo));
}

}  // namespace mbcount
