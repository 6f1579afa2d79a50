#include "mbcount/enumeration.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mbcount {
namespace {

// Acyclicity of the arcs among the nodes in `scope` (a node-index mask).
bool subgraph_is_dag(const Digraph& g, std::uint64_t scope) {
  int n = g.node_count();
  std::uint64_t parents[kMaxDigraphNodes];
  for (int v = 0; v < n; ++v)
    parents[v] = g.parents_of(v) & scope;

  std::uint64_t alive = scope;
  bool progress = true;
  while (alive != 0 && progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if ((alive & bit) && (parents[v] & alive) == 0) {
        alive &= ~bit;
        progress = true;
      }
    }
  }
  return alive == 0;
}

}  // namespace

char role_letter(NodeRole role) {
  switch (role) {
    case NodeRole::Target: return 'T';
    case NodeRole::Parent: return 'P';
    case NodeRole::Child: return 'C';
    case NodeRole::Spouse: return 'S';
    case NodeRole::Other: return 'O';
  }
  throw std::domain_error("role_letter: bad role");
}

std::vector<NodeRole> classify_roles(const Digraph& g) {
  if (!is_dag(g))
    throw std::domain_error("classify_roles: graph is cyclic");

  int n = g.node_count();
  int t = g.target();
  std::uint64_t parents = g.parents_of(t);
  std::uint64_t children = g.children_of(t);

  std::vector<NodeRole> roles(static_cast<std::size_t>(n), NodeRole::Other);
  roles[static_cast<std::size_t>(t)] = NodeRole::Target;
  for (int v = 0; v < n; ++v) {
    if (v == t) continue;
    std::uint64_t bit = std::uint64_t{1} << v;
    if (parents & bit)
      roles[static_cast<std::size_t>(v)] = NodeRole::Parent;
    else if (children & bit)
      roles[static_cast<std::size_t>(v)] = NodeRole::Child;
    else if (g.children_of(v) & children)
      roles[static_cast<std::size_t>(v)] = NodeRole::Spouse;
  }
  return roles;
}

PartitionTriple role_partition(const std::vector<NodeRole>& roles) {
  PartitionTriple split;
  for (NodeRole role : roles) {
    switch (role) {
      case NodeRole::Target: break;
      case NodeRole::Parent: ++split.n_p; break;
      case NodeRole::Child: ++split.n_c; break;
      case NodeRole::Spouse:
      case NodeRole::Other: ++split.n_so; break;
    }
  }
  return split;
}

bool is_canonical_mb(const Digraph& g) {
  int t = g.target();
  std::uint64_t parents = g.parents_of(t);
  std::uint64_t children = g.children_of(t);
  if ((parents & children) != 0)  // target caught in a 2-cycle
    return false;

  // Arcs into the target are parent arcs by definition, so only arcs between
  // non-target nodes can break canonicity: they must point at a child.
  int n = g.node_count();
  for (int src = 0; src < n; ++src) {
    if (src == t) continue;
    std::uint64_t stray = g.children_of(src) &
                          ~children & ~(std::uint64_t{1} << t);
    if (stray != 0)
      return false;
  }
  return subgraph_is_dag(g, children);
}

MbStructureKey MbStructureKey::from_digraph(const Digraph& g) {
  MbStructureKey key;
  key.n_ = g.node_count();
  key.target_ = g.target();
  key.mask_ = g.arc_mask();
  key.edges_ = g.arcs();
  return key;
}

Digraph MbStructureKey::to_digraph() const {
  return Digraph(n_, target_, mask_);
}

MbStructureKey MbStructureKey::relabeled_target_zero() const {
  if (target_ == 0)
    return *this;
  auto swap_label = [this](int v) {
    if (v == target_) return 0;
    if (v == 0) return target_;
    return v;
  };
  Digraph relabeled(n_, 0);
  for (auto [src, dst] : edges_)
    relabeled.add_arc(swap_label(src), swap_label(dst));
  return from_digraph(relabeled);
}

std::string MbStructureKey::edge_text() const {
  if (edges_.empty())
    return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != 0) out << ';';
    out << edges_[i].first << '>' << edges_[i].second;
  }
  return out.str();
}

std::strong_ordering operator<=>(const MbStructureKey& a,
                                 const MbStructureKey& b) {
  if (auto cmp = a.n_ <=> b.n_; cmp != 0) return cmp;
  if (auto cmp = a.target_ <=> b.target_; cmp != 0) return cmp;
  return a.mask_ <=> b.mask_;
}

MbStructureKey extract_mb(const Digraph& g) {
  if (!is_dag(g))
    throw std::domain_error("extract_mb: graph is cyclic");

  int t = g.target();
  std::uint64_t children = g.children_of(t);
  Digraph kept(g.node_count(), t);
  for (auto [src, dst] : g.arcs())
    if (dst == t || ((children >> dst) & 1))
      kept.add_arc(src, dst);
  return MbStructureKey::from_digraph(kept);
}

ExactCount count_dags_brute(int n, bool force) {
  ExactCount count = 0;
  for (Digraph g : all_digraphs(n, 0, force))
    if (is_dag(g))
      ++count;
  return count;
}

ExactCount count_mb_naive(int n, int target, bool force) {
  ExactCount count = 0;
  for (Digraph g : all_digraphs(n, target, force))
    if (is_canonical_mb(g))
      ++count;
  return count;
}

ExactCount count_mb_by_extraction(int n, int target, bool force) {
  std::set<std::uint64_t> seen;
  for (Digraph g : all_digraphs(n, target, force))
    if (is_dag(g))
      seen.insert(extract_mb(g).arc_mask());
  return ExactCount(seen.size());
}

std::vector<MbStructureKey> enumerate_mb(int n, int target, bool force) {
  std::vector<MbStructureKey> keys;
  for (Digraph g : all_digraphs(n, target, force))
    if (is_canonical_mb(g))
      keys.push_back(MbStructureKey::from_digraph(g));
  return keys;  // ascending arc mask, which is key order
}

}  // namespace mbcount
