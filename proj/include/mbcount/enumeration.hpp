#pragma once

#include "mbcount/counting.hpp"
#include "mbcount/digraph.hpp"
#include "mbcount/exact.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mbcount {

// Role of a node relative to the target, read off the arcs: a parent has an
// arc to the target, a child receives one from it, a spouse has an arc into
// a child without being a parent or child itself, and the rest are inert.
enum class NodeRole : unsigned char { Target, Parent, Child, Spouse, Other };

char role_letter(NodeRole role);

// Role of every node of an acyclic g (indexed by node); cyclic input throws.
std::vector<NodeRole> classify_roles(const Digraph& g);

// Parents / children / spouse-plus-other tallies of a role vector.
PartitionTriple role_partition(const std::vector<NodeRole>& roles);

// True iff g is a canonical blanket structure: no node is both parent and
// child of the target, every arc points at the target or at one of its
// children, and the arcs among the children are acyclic. (Those three rules
// already force g to be a DAG.)
bool is_canonical_mb(const Digraph& g);

// Identity of one canonical blanket structure: node count, target and the
// arc list sorted by (src, dst). Ordering compares (n, target, arc mask), so
// ascending-mask enumeration emits keys already sorted.
class MbStructureKey {
 public:
  static MbStructureKey from_digraph(const Digraph& g);

  int node_count() const noexcept { return n_; }
  int target() const noexcept { return target_; }
  std::uint64_t arc_mask() const noexcept { return mask_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept {
    return edges_;
  }

  Digraph to_digraph() const;

  // Same structure with the target swapped down to node 0, for comparing
  // enumerations that used different target labels.
  MbStructureKey relabeled_target_zero() const;

  // "0>2;1>2" with arcs in sorted order; "-" when there are none.
  std::string edge_text() const;

  friend bool operator==(const MbStructureKey& a, const MbStructureKey& b) {
    return a.n_ == b.n_ && a.target_ == b.target_ && a.mask_ == b.mask_;
  }
  friend std::strong_ordering operator<=>(const MbStructureKey& a,
                                          const MbStructureKey& b);

 private:
  MbStructureKey() = default;

  int n_ = 0;
  int target_ = 0;
  std::uint64_t mask_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// The blanket structure a DAG induces on its target: keeps exactly the arcs
// that enter the target or one of its children (which covers parent->target,
// target->child, parent->child, spouse->child and child->child arcs) and
// drops everything else. Cyclic input throws. Idempotent, and the result
// always satisfies is_canonical_mb.
MbStructureKey extract_mb(const Digraph& g);

// Brute-force oracles. Each walks all 2^(n(n-1)) digraphs, so the
// enumeration cap applies (force raises it by one node).
ExactCount count_dags_brute(int n, bool force = false);
ExactCount count_mb_naive(int n, int target, bool force = false);
ExactCount count_mb_by_extraction(int n, int target, bool force = false);

// Every canonical blanket structure for the given target, in key order.
std::vector<MbStructureKey> enumerate_mb(int n, int target,
                                         bool force = false);

}  // namespace mbcount
