#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "clarkit/errors.hpp"
#include "clarkit/tk_family.hpp"
#include "clarkit/tree_canonical.hpp"

using namespace clarkit;

namespace {

SubcubicTree relabel(const SubcubicTree& tree, std::mt19937& rng) {
  std::vector<int> perm(tree.node_count());
  for (int i = 0; i < tree.node_count(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const auto& [u, v] : tree.edges()) edges.push_back({perm[u], perm[v]});
  return SubcubicTree(tree.node_count(), std::move(edges));
}

}  // namespace

TEST_CASE("make_tk shapes") {
  CHECK_THROWS_AS(make_tk(1), InvalidArgumentError);
  CHECK(tree_canonical_code(make_tk(2)) == tree_canonical_code(SubcubicTree::path(5)));
  for (int k = 2; k <= 8; ++k) {
    auto tree = make_tk(k);
    CHECK(tree.node_count() == 3 * k - 1);
    CHECK(static_cast<int>(tree.leaves().size()) == k);
  }
  // k = 4: extra leaves 9 and 10 hang on v4 (id 3) and v6 (id 5).
  auto t4 = make_tk(4);
  CHECK(t4.degree(3) == 3);
  CHECK(t4.degree(5) == 3);
  CHECK(t4.neighbors(9) == std::vector<int>{3});
  CHECK(t4.neighbors(10) == std::vector<int>{5});
}

TEST_CASE("T_k attains the bound with a unique maximum independent set") {
  for (int k = 2; k <= 50; ++k) {
    auto tree = make_tk(k);
    CHECK(alpha(tree) == 2 * k - 1);
    CHECK(alpha(tree) == independence_bound(3 * k - 1));
  }
  for (int k = 2; k <= 8; ++k) {
    auto sets = enumerate_mis(make_tk(k));
    REQUIRE(sets.size() == 1);
    std::vector<int> expected;
    for (int i = 0; i <= 2 * k; i += 2) expected.push_back(i);  // v1, v3, ..., v_{2k+1}
    for (int j = 0; j < k - 2; ++j) expected.push_back(2 * k + 1 + j);
    std::sort(expected.begin(), expected.end());
    CHECK(sets[0] == expected);
  }
}

TEST_CASE("is_tk recognizes exactly the family") {
  for (int k = 2; k <= 50; ++k) {
    auto d = is_tk(make_tk(k));
    REQUIRE(d.has_value());
    CHECK(d->k == k);
    CHECK(static_cast<int>(d->spine.size()) == 2 * k + 1);
    CHECK(static_cast<int>(d->extra_leaves.size()) == k - 2);
  }
  CHECK_FALSE(is_tk(SubcubicTree::star(3)).has_value());
  CHECK_FALSE(is_tk(SubcubicTree::path(6)).has_value());  // 6 != 3k-1
  CHECK_FALSE(is_tk(SubcubicTree::path(2)).has_value());

  // Every enumerated tree whose node count is not 2 mod 3 is rejected.
  for (int n = 1; n <= 10; ++n)
    for (const auto& tree : enumerate_subcubic_trees(n))
      if (n % 3 != 2) CHECK_FALSE(is_tk(tree).has_value());
}

TEST_CASE("is_tk descriptor survives relabeling and is spine-consistent") {
  std::mt19937 rng(20240811);
  for (int k : {2, 3, 5, 7}) {
    auto shuffled = relabel(make_tk(k), rng);
    auto d = is_tk(shuffled);
    REQUIRE(d.has_value());
    CHECK(d->k == k);
    for (int i = 0; i + 1 < static_cast<int>(d->spine.size()); ++i) {
      auto nb = shuffled.neighbors(d->spine[i]);
      CHECK(std::find(nb.begin(), nb.end(), d->spine[i + 1]) != nb.end());
    }
    for (auto [pos, leaf] : d->extra_leaves) {
      CHECK(pos % 2 == 0);
      CHECK(pos >= 4);
      CHECK(pos <= 2 * k - 2);
      CHECK(shuffled.is_leaf(leaf));
      CHECK(shuffled.neighbors(leaf) == std::vector<int>{d->spine[pos - 1]});
    }
  }
}

TEST_CASE("classify_extremal_tree on named examples") {
  auto t3 = classify_extremal_tree(make_tk(3));
  CHECK(t3.kind == TreeClass::IsTk);
  REQUIRE(t3.tk.has_value());
  CHECK(t3.tk->k == 3);

  // Spider: node 0 carries two leaves and a two-node path.
  SubcubicTree spider(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  auto cls = classify_extremal_tree(spider);
  CHECK(cls.kind == TreeClass::HasDoubleLeafNeighbor);
  CHECK(cls.double_leaf_node == 0);

  // alpha(P4) = 2 < floor(9/3) = 3: precondition fails.
  CHECK_THROWS_AS(classify_extremal_tree(SubcubicTree::path(4)), InvalidArgumentError);

  CHECK(classify_extremal_tree(SubcubicTree(1, {})).kind == TreeClass::Small);
  CHECK(classify_extremal_tree(SubcubicTree::path(2)).kind == TreeClass::Small);
}

TEST_CASE("every extremal subcubic tree up to 10 nodes classifies as the theorem says") {
  for (int n = 3; n <= 10; ++n)
    for (const auto& tree : enumerate_subcubic_trees(n)) {
      if (alpha(tree) != independence_bound(n)) continue;
      auto cls = classify_extremal_tree(tree);
      bool expected =
          cls.kind == TreeClass::IsTk || cls.kind == TreeClass::HasDoubleLeafNeighbor;
      CHECK(expected);
      if (cls.kind == TreeClass::IsTk) {
        // Mutual exclusion: a T_k never has a vertex with two leaf neighbors.
        for (int v = 0; v < n; ++v) {
          int leaf_neighbors = 0;
          for (int w : tree.neighbors(v))
            if (tree.is_leaf(w)) ++leaf_neighbors;
          CHECK(leaf_neighbors <= 1);
        }
      }
    }
}
