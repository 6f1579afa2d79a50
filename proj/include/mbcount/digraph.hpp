#pragma once

#include <cstdint>
#include <iterator>
#include <utility>
#include <vector>

namespace mbcount {

// Enumerating all digraphs on n nodes costs 2^(n(n-1)) graphs, so the
// brute-force routines refuse above this cap unless forced, and the forced
// cap is still small enough to finish the same day.
inline constexpr int kEnumerationCap = 5;
inline constexpr int kForcedEnumerationCap = 6;

// The arc set must fit in the 64-bit mask: n(n-1) <= 64.
inline constexpr int kMaxDigraphNodes = 8;

// A labeled digraph on n <= 8 nodes with one designated target node.
// Arc (src -> dst) lives at bit dst*(n-1) + (src < dst ? src : src-1), i.e.
// the mask is row-major by head node, so row d is the parent set of d and
// counting up through masks enumerates parent sets of low nodes first.
class Digraph {
 public:
  Digraph(int n, int target, std::uint64_t arc_mask = 0);

  int node_count() const noexcept { return n_; }
  int target() const noexcept { return target_; }
  std::uint64_t arc_mask() const noexcept { return mask_; }

  bool has_arc(int src, int dst) const;
  void add_arc(int src, int dst);

  // Node-index bitmasks (bit v = node v), not arc-bit masks.
  std::uint64_t parents_of(int node) const;
  std::uint64_t children_of(int node) const;

  int arc_count() const;
  std::vector<std::pair<int, int>> arcs() const;  // sorted by (src, dst)

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int arc_bit(int src, int dst) const;

  int n_;
  int target_;
  std::uint64_t mask_;
};

// True iff the graph has no directed cycle (repeatedly peel nodes whose
// remaining parents are all gone).
bool is_dag(const Digraph& g);

// Lazy range over every digraph on n nodes in ascending arc-mask order, all
// sharing the given target. Construction enforces the enumeration cap.
class DigraphRange {
 public:
  DigraphRange(int n, int target, bool force);

  class iterator {
   public:
    using value_type = Digraph;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(int n, int target, std::uint64_t mask)
        : n_(n), target_(target), mask_(mask) {}

    Digraph operator*() const { return Digraph(n_, target_, mask_); }
    iterator& operator++() { ++mask_; return *this; }
    iterator operator++(int) { iterator old = *this; ++mask_; return old; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    int n_;
    int target_;
    std::uint64_t mask_;
  };

  iterator begin() const { return iterator(n_, target_, 0); }
  iterator end() const { return iterator(n_, target_, mask_count_); }
  std::uint64_t size() const noexcept { return mask_count_; }

 private:
  int n_;
  int target_;
  std::uint64_t mask_count_;
};

DigraphRange all_digraphs(int n, int target = 0, bool force = false);

}  // namespace mbcount
