#include <doctest.h>

#include <map>
#include <set>

#include "clarkit/errors.hpp"
#include "clarkit/extremal.hpp"
#include "clarkit/matching.hpp"
#include "test_support.hpp"

using namespace clarkit;

namespace {

BenzenoidGraph bent3() {
  return BenzenoidGraph::build(BenzenoidSpec{3, {{0, 1, 0}, {1, 2, 2}}});
}

}  // namespace

TEST_CASE("has_perfect_matching basics") {
  auto hexagon = BenzenoidGraph::build(single_hexagon_spec());
  CHECK(has_perfect_matching(hexagon));

  // Hexagon minus one vertex: a path on five vertices, odd order.
  CHECK_FALSE(has_perfect_matching(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));

  CHECK(has_perfect_matching(0, {}));
}

TEST_CASE("every catacondensed benzenoid up to 6 hexagons is Kekulean") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& spec : enumerate_catacondensed(n))
      CHECK(has_perfect_matching(BenzenoidGraph::build(spec)));
}

TEST_CASE("general matching handles odd cycles") {
  // Triangle with a pendant vertex.
  CHECK(has_perfect_matching(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}));
  // Five-cycle with a pendant vertex: augments through the blossom.
  CHECK(has_perfect_matching(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}}));
  // K4 has one; C7 is odd.
  CHECK(has_perfect_matching(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK_FALSE(has_perfect_matching(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}}));
  // Two triangles joined by a bridge.
  CHECK(has_perfect_matching(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}}));
}

TEST_CASE("enumerate_perfect_matchings counts") {
  auto hexagon = BenzenoidGraph::build(single_hexagon_spec());
  CHECK(enumerate_perfect_matchings(hexagon).size() == 2);

  auto naphthalene = BenzenoidGraph::build(linear_chain_spec(2));
  CHECK(enumerate_perfect_matchings(naphthalene).size() == 3);

  // The straight chain of n hexagons has n+1 Kekule structures.
  for (int n = 1; n <= 10; ++n) {
    auto chain = BenzenoidGraph::build(linear_chain_spec(n));
    CHECK(enumerate_perfect_matchings(chain).size() == static_cast<size_t>(n + 1));
  }

  CHECK_THROWS_AS(enumerate_perfect_matchings(naphthalene, 8), ResourceLimitError);
}

TEST_CASE("enumerated matchings are distinct valid perfect matchings") {
  for (const auto& spec : enumerate_catacondensed(4)) {
    auto g = BenzenoidGraph::build(spec);
    auto all = enumerate_perfect_matchings(g);
    std::set<std::vector<Edge>> seen;
    for (const auto& m : all) {
      CHECK(is_perfect_matching(g.vertex_count(), g.edges(), m));
      CHECK(seen.insert(m.edges).second);
    }
  }
}

TEST_CASE("alternating_hexagons") {
  auto hexagon = BenzenoidGraph::build(single_hexagon_spec());
  for (const auto& m : enumerate_perfect_matchings(hexagon))
    CHECK(alternating_hexagons(hexagon, m) == std::vector<int>{0});

  // Naphthalene with the shared edge matched: both hexagons alternate.
  auto naphthalene = BenzenoidGraph::build(linear_chain_spec(2));
  Edge shared = naphthalene.common_edge(0, 1);
  bool found = false;
  for (const auto& m : enumerate_perfect_matchings(naphthalene)) {
    std::set<Edge> edges(m.edges.begin(), m.edges.end());
    if (!edges.count(shared)) continue;
    found = true;
    CHECK(alternating_hexagons(naphthalene, m) == std::vector<int>{0, 1});
  }
  CHECK(found);

  CHECK_THROWS_AS(alternating_hexagons(hexagon, PerfectMatching{}), InvalidArgumentError);
}

TEST_CASE("matching_after_removal") {
  auto hexagon = BenzenoidGraph::build(single_hexagon_spec());
  auto empty = matching_after_removal(hexagon, {0});
  REQUIRE(empty.has_value());
  CHECK(empty->edges.empty());

  auto naphthalene = BenzenoidGraph::build(linear_chain_spec(2));
  auto rest = matching_after_removal(naphthalene, {0});
  REQUIRE(rest.has_value());
  CHECK(rest->edges.size() == 2);  // the leftover 4-path matches by its end edges
  CHECK_THROWS_AS(matching_after_removal(naphthalene, {0, 1}), InvalidArgumentError);

  // Both terminal hexagons of the bent chain can alternate simultaneously;
  // in the straight chain they cannot (the middle's free corners are apart).
  CHECK(matching_after_removal(bent3(), {0, 2}).has_value());
  auto straight = BenzenoidGraph::build(linear_chain_spec(3));
  CHECK_FALSE(matching_after_removal(straight, {0, 2}).has_value());
}

TEST_CASE("removal feasibility is equivalent to an alternating matching existing") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& spec : enumerate_catacondensed(n)) {
      auto g = BenzenoidGraph::build(spec);
      auto matchings = enumerate_perfect_matchings(g);

      // Independent (pairwise vertex-disjoint) hexagon sets by bitmask.
      std::vector<std::set<int>> hex_vertices(n);
      for (int h = 0; h < n; ++h)
        hex_vertices[h] = {g.hexagon(h).begin(), g.hexagon(h).end()};
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> set;
        bool independent = true;
        for (int h = 0; h < n && independent; ++h) {
          if (!(mask >> h & 1)) continue;
          for (int other : set)
            for (int v : hex_vertices[h])
              if (hex_vertices[other].count(v)) independent = false;
          set.push_back(h);
        }
        if (!independent) continue;

        bool via_removal = matching_after_removal(g, set).has_value();
        bool via_scan = false;
        for (const auto& m : matchings) {
          auto alt = alternating_hexagons(g, m);
          std::set<int> alt_set(alt.begin(), alt.end());
          bool all = true;
          for (int h : set) all = all && alt_set.count(h);
          if (all) {
            via_scan = true;
            break;
          }
        }
        CHECK(via_removal == via_scan);
      }
    }
}
