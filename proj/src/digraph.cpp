#include "mbcount/digraph.hpp"

#include <stdexcept>
#include <string>

namespace mbcount {

Digraph::Digraph(int n, int target, std::uint64_t arc_mask)
    : n_(n), target_(target), mask_(arc_mask) {
  if (n < 1 || n > kMaxDigraphNodes)
    throw std::domain_error("Digraph: node count must be in 1.." +
                            std::to_string(kMaxDigraphNodes));
  if (target < 0 || target >= n)
    throw std::domain_error("Digraph: target out of range");
  int bits = n * (n - 1);
  if (bits < 64 && (arc_mask >> bits) != 0)
    throw std::domain_error("Digraph: arc mask has bits beyond n(n-1)");
}

int Digraph::arc_bit(int src, int dst) const {
  return dst * (n_ - 1) + (src < dst ? src : src - 1);
}

bool Digraph::has_arc(int src, int dst) const {
  if (src < 0 || src >= n_ || dst < 0 || dst >= n_ || src == dst)
    throw std::domain_error("Digraph::has_arc: bad node pair");
  return (mask_ >> arc_bit(src, dst)) & 1;
}

void Digraph::add_arc(int src, int dst) {
  if (src < 0 || src >= n_ || dst < 0 || dst >= n_ || src == dst)
    throw std::domain_error("Digraph::add_arc: bad node pair");
  mask_ |= std::uint64_t{1} << arc_bit(src, dst);
}

std::uint64_t Digraph::parents_of(int node) const {
  std::uint64_t result = 0;
  for (int src = 0; src < n_; ++src)
    if (src != node && ((mask_ >> arc_bit(src, node)) & 1))
      result |= std::uint64_t{1} << src;
  return result;
}

std::uint64_t Digraph::children_of(int node) const {
  std::uint64_t result = 0;
  for (int dst = 0; dst < n_; ++dst)
    if (dst != node && ((mask_ >> arc_bit(node, dst)) & 1))
      result |= std::uint64_t{1} << dst;
  return result;
}

int Digraph::arc_count() const {
  int count = 0;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1)
    ++count;
  return count;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> result;
  for (int src = 0; src < n_; ++src)
    for (int dst = 0; dst < n_; ++dst)
      if (src != dst && ((mask_ >> arc_bit(src, dst)) & 1))
        result.emplace_back(src, dst);
  return result;
}

bool is_dag(const Digraph& g) {
  int n = g.node_count();
  std::uint64_t parents[kMaxDigraphNodes];
  for (int v = 0; v < n; ++v)
    parents[v] = g.parents_of(v);

  std::uint64_t alive = (std::uint64_t{1} << n) - 1;
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

DigraphRange::DigraphRange(int n, int target, bool force)
    : n_(n), target_(target) {
  int cap = force ? kForcedEnumerationCap : kEnumerationCap;
  if (n < 1)
    throw std::domain_error("all_digraphs: n must be at least 1");
  if (n > cap)
    throw std::domain_error(
        "all_digraphs: n = " + std::to_string(n) + " means 2^" +
        std::to_string(n * (n - 1)) + " digraphs; the cap is " +
        std::to_string(kEnumerationCap) + " (" +
        std::to_string(kForcedEnumerationCap) + " with force)");
  if (target < 0 || target >= n)
    throw std::domain_error("all_digraphs: target out of range");
  mask_count_ = std::uint64_t{1} << (n * (n - 1));
}

DigraphRange all_digraphs(int n, int target, bool force) {
  return DigraphRange(n, target, force);
}

}  // namespace mbcount
