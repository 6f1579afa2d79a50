#include "mbcount/enumeration.hpp"

#include "mbcount/counting.hpp"
#include "mbcount/digraph.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace mbcount;

namespace {

Digraph from_arcs(int n, int target,
                  const std::vector<std::pair<int, int>>& arcs) {
  Digraph g(n, target);
  for (auto [src, dst] : arcs)
    g.add_arc(src, dst);
  return g;
}

}  // namespace

TEST_CASE("classify_roles reads roles off the arcs") {
  // target 0 with a parent that also feeds the child directly
  auto roles = classify_roles(from_arcs(3, 0, {{1, 0}, {0, 2}, {1, 2}}));
  CHECK(roles == std::vector<NodeRole>{NodeRole::Target, NodeRole::Parent,
                                       NodeRole::Child});

  // v-structure: node 2 shares child 1 without touching the target
  roles = classify_roles(from_arcs(3, 0, {{0, 1}, {2, 1}}));
  CHECK(roles == std::vector<NodeRole>{NodeRole::Target, NodeRole::Child,
                                       NodeRole::Spouse});

  // arcs that never reach the target's family leave their nodes inert
  roles = classify_roles(from_arcs(3, 0, {{1, 2}}));
  CHECK(roles == std::vector<NodeRole>{NodeRole::Target, NodeRole::Other,
                                       NodeRole::Other});

  CHECK(classify_roles(Digraph(1, 0)) ==
        std::vector<NodeRole>{NodeRole::Target});

  CHECK_THROWS_AS(classify_roles(from_arcs(2, 0, {{0, 1}, {1, 0}})),
                  std::domain_error);
}

TEST_CASE("role letters") {
  CHECK(role_letter(NodeRole::Target) == 'T');
  CHECK(role_letter(NodeRole::Parent) == 'P');
  CHECK(role_letter(NodeRole::Child) == 'C');
  CHECK(role_letter(NodeRole::Spouse) == 'S');
  CHECK(role_letter(NodeRole::Other) == 'O');
}

TEST_CASE("role_partition tallies the non-target roles") {
  auto roles = classify_roles(from_arcs(4, 0, {{1, 0}, {0, 2}, {3, 2}}));
  PartitionTriple split = role_partition(roles);
  CHECK(split == PartitionTriple{1, 1, 1});  // spouse counts into n_so
}

TEST_CASE("is_canonical_mb accepts exactly the blanket shapes") {
  // parent -> target -> child with the parent shortcut: canonical
  CHECK(is_canonical_mb(from_arcs(3, 0, {{1, 0}, {0, 2}, {1, 2}})));
  // arc between two bystanders: not canonical
  CHECK_FALSE(is_canonical_mb(from_arcs(3, 0, {{1, 2}})));
  // arc from a parent to a non-child: not canonical
  CHECK_FALSE(is_canonical_mb(from_arcs(3, 0, {{1, 0}, {1, 2}})));
  // two-cycle through the target: not canonical (and not a DAG)
  CHECK_FALSE(is_canonical_mb(from_arcs(2, 0, {{0, 1}, {1, 0}})));
  // cycle among the children: not canonical
  CHECK_FALSE(is_canonical_mb(
      from_arcs(4, 0, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}})));
  // child-to-child arcs in a DAG pattern: canonical
  CHECK(is_canonical_mb(from_arcs(3, 0, {{0, 1}, {0, 2}, {1, 2}})));
  // the empty structure is canonical for any n
  CHECK(is_canonical_mb(Digraph(5, 2)));
}

TEST_CASE("canonical structures are always DAGs") {
  for (Digraph g : all_digraphs(4, 1))
    if (is_canonical_mb(g))
      CHECK(is_dag(g));
}

TEST_CASE("extract_mb keeps the blanket arcs and drops the rest") {
  // arc into a non-child is discarded
  MbStructureKey key = extract_mb(from_arcs(3, 0, {{1, 0}, {1, 2}}));
  CHECK(key.edge_text() == "1>0");

  // a canonical structure is its own extraction
  Digraph fixed = from_arcs(3, 0, {{1, 0}, {0, 2}, {1, 2}});
  CHECK(extract_mb(fixed).to_digraph() == fixed);

  // spouse arcs survive because they enter a child
  key = extract_mb(from_arcs(4, 0, {{0, 1}, {2, 1}, {2, 3}}));
  CHECK(key.edge_text() == "0>1;2>1");

  CHECK_THROWS_AS(extract_mb(from_arcs(2, 0, {{0, 1}, {1, 0}})),
                  std::domain_error);
}

TEST_CASE("extract_mb is idempotent over every small DAG") {
  for (int n = 1; n <= 4; ++n)
    for (int target = 0; target < n; ++target)
      for (Digraph g : all_digraphs(n, target))
        if (is_dag(g)) {
          MbStructureKey once = extract_mb(g);
          CHECK(is_canonical_mb(once.to_digraph()));
          CHECK(extract_mb(once.to_digraph()) == once);
        }
}

TEST_CASE("brute-force DAG counts match the recurrence") {
  MemoTable memo;
  for (int n = 1; n <= 4; ++n)
    CHECK(count_dags_brute(n) == bn_count(n, memo));
}

TEST_CASE("both blanket oracles match the formula for every target") {
  MemoTable memo;
  for (int n = 1; n <= 4; ++n) {
    ExactCount expected = mb_count(n, memo);
    for (int target = 0; target < n; ++target) {
      CHECK(count_mb_naive(n, target) == expected);
      CHECK(count_mb_by_extraction(n, target) == expected);
    }
  }
}

TEST_CASE("enumerate_mb lists the three 2-node structures in order") {
  std::vector<MbStructureKey> keys = enumerate_mb(2, 0);
  REQUIRE(keys.size() == 3);
  CHECK(keys[0].edge_text() == "-");
  CHECK(keys[1].edge_text() == "1>0");
  CHECK(keys[2].edge_text() == "0>1");
}

TEST_CASE("enumerate_mb emits sorted, distinct, canonical keys") {
  MemoTable memo;
  for (int n = 1; n <= 4; ++n) {
    std::vector<MbStructureKey> keys = enumerate_mb(n, 0);
    CHECK(ExactCount(keys.size()) == mb_count(n, memo));
    for (std::size_t i = 0; i < keys.size(); ++i) {
      CHECK(is_canonical_mb(keys[i].to_digraph()));
      if (i > 0)
        CHECK(keys[i - 1] < keys[i]);
    }
  }
}

TEST_CASE("enumerations for different targets agree after relabeling") {
  for (int n = 2; n <= 4; ++n) {
    std::set<std::uint64_t> baseline;
    for (const MbStructureKey& key : enumerate_mb(n, 0))
      baseline.insert(key.arc_mask());
    for (int target = 1; target < n; ++target) {
      std::set<std::uint64_t> relabeled;
      for (const MbStructureKey& key : enumerate_mb(n, target))
        relabeled.insert(key.relabeled_target_zero().arc_mask());
      CHECK(relabeled == baseline);
    }
  }
}

TEST_CASE("enumeration splits by role exactly as the partition terms say") {
  MemoTable memo;
  for (int n = 1; n <= 4; ++n) {
    std::map<PartitionTriple, long long> buckets;
    for (const MbStructureKey& key : enumerate_mb(n, 0))
      ++buckets[role_partition(classify_roles(key.to_digraph()))];

    long long total = 0;
    for (long long n_p = 0; n_p <= n - 1; ++n_p)
      for (long long n_so = 0; n_p + n_so <= n - 1; ++n_so) {
        PartitionTriple split{n_p, n - 1 - n_p - n_so, n_so};
        CHECK(ExactCount(buckets[split]) ==
              mb_partition_term(n, n_p, n_so, memo));
        total += buckets[split];
      }
    CHECK(static_cast<std::size_t>(total) == enumerate_mb(n, 0).size());
  }
}

TEST_CASE("key identity and relabeling") {
  Digraph g = from_arcs(3, 1, {{0, 1}, {1, 2}});
  MbStructureKey key = MbStructureKey::from_digraph(g);
  CHECK(key.node_count() == 3);
  CHECK(key.target() == 1);
  CHECK(key.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(key.to_digraph() == g);

  MbStructureKey swapped = key.relabeled_target_zero();
  CHECK(swapped.target() == 0);
  CHECK(swapped.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 0}});

  MbStructureKey empty = MbStructureKey::from_digraph(Digraph(1, 0));
  CHECK(empty.edge_text() == "-");
  CHECK(empty.relabeled_target_zero() == empty);
}
