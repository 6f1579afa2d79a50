#pragma once

#include "mbcount/exact.hpp"

#include <compare>
#include <cstddef>
#include <deque>

namespace mbcount {

// Write-once cache of labeled-DAG counts: entry m holds the number of DAGs
// on m nodes. Entry 0 is 1 from construction and entries are only appended,
// never rewritten. Not thread-safe; confine each table to one thread.
class MemoTable {
 public:
  MemoTable() { entries_.push_back(1); }

  std::size_t size() const noexcept { return entries_.size(); }

  // Cached value for m nodes; throws if bn_count has not reached m yet.
  const ExactCount& at(std::size_t m) const {
    if (m >= entries_.size())
      throw std::out_of_range("MemoTable::at: entry not computed yet");
    return entries_[m];
  }

  OpCounter& ops() noexcept { return ops_; }
  const OpCounter& ops() const noexcept { return ops_; }

 private:
  friend const ExactCount& bn_count(long long n, MemoTable& memo);

  std::deque<ExactCount> entries_;  // deque: growth never moves elements
  OpCounter ops_;
};

// One way to split the n-1 non-target nodes into parents, children and
// spouse/other nodes.
struct PartitionTriple {
  long long n_p = 0;
  long long n_c = 0;
  long long n_so = 0;

  friend auto operator<=>(const PartitionTriple&,
                          const PartitionTriple&) = default;
};

// C(n, k); throws std::domain_error for negative arguments or k > n.
ExactCount binomial(long long n, long long k);

// (n_p + n_c + n_so)! / (n_p! n_c! n_so!); negative arguments throw.
ExactCount multinomial3(long long n_p, long long n_c, long long n_so);

// Number of labeled DAGs on n nodes, by inclusion-exclusion over the set of
// k source nodes: sum over k of (-1)^(k+1) C(n,k) 2^(k(n-k)) BN(n-k), with
// BN(0) = 1. Fills the memo bottom-up, evaluating exactly m summands for each
// new level m, and returns a reference into the table (stable for its life).
const ExactCount& bn_count(long long n, MemoTable& memo);

// One summand of the Markov-blanket sum: the number of canonical blanket
// structures on n nodes whose non-target nodes split as (n_p parents,
// n_so spouse/other, n_c = n-1-n_p-n_so children). Throws if the split is
// infeasible. Ticks terms_evaluated once; a cold DAG cache for n_c ticks more.
ExactCount mb_partition_term(long long n, long long n_p, long long n_so,
                             MemoTable& memo);

// Number of distinct Markov-blanket structures on n nodes (n >= 1): the
// partition terms summed over all n(n+1)/2 feasible (n_p, n_so) pairs.
ExactCount mb_count(long long n, MemoTable& memo);

// bn_count(n) / mb_count(n), kept unreduced so the parts stay recognizable.
ExactRatio ratio(long long n, MemoTable& memo);

}  // namespace mbcount
