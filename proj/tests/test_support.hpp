#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "clarkit/benzenoid_graph.hpp"
#include "clarkit/subcubic_tree.hpp"

namespace test_support {

// Brute-force independence number over all vertex subsets (n <= ~20).
inline int alpha_bruteforce(const clarkit::SubcubicTree& tree) {
  int n = tree.node_count();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : tree.edges())
      if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// Brute-force minimum vertex cover size.
inline int vertex_cover_bruteforce(const clarkit::SubcubicTree& tree) {
  int n = tree.node_count();
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : tree.edges())
      if (!(mask >> u & 1) && !(mask >> v & 1)) ok = false;
    if (ok) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

// All maximum independent sets by subset scan.
inline std::vector<std::vector<int>> mis_bruteforce(const clarkit::SubcubicTree& tree) {
  int n = tree.node_count();
  int best = alpha_bruteforce(tree);
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != best) continue;
    bool ok = true;
    for (const auto& [u, v] : tree.edges())
      if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
    if (!ok) continue;
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) set.push_back(v);
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_independent_set(const clarkit::SubcubicTree& tree,
                               const std::vector<int>& set) {
  std::set<int> s(set.begin(), set.end());
  for (const auto& [u, v] : tree.edges())
    if (s.count(u) && s.count(v)) return false;
  return true;
}

// Benzenoid built from a set of hexagonal lattice cells, assembled from
// corner coordinates alone. Independent of the spec/gluing machinery, so it
// doubles as an oracle for the builder and as the pericondensed fixture
// factory. Cells are axial coordinates; two cells are fused iff adjacent.
inline clarkit::BenzenoidGraph lattice_benzenoid(
    const std::vector<std::pair<int, int>>& cells) {
  // Corner c of the cell centered at 3*(q*u + r*v) in triangular coords.
  constexpr std::pair<int, int> off[6] = {{1, 0}, {0, 1}, {-1, 1},
                                          {-1, 0}, {0, -1}, {1, -1}};
  std::vector<std::pair<int, int>> points;
  auto point_id = [&](std::pair<int, int> p) {
    for (size_t i = 0; i < points.size(); ++i)
      if (points[i] == p) return static_cast<int>(i);
    points.push_back(p);
    return static_cast<int>(points.size() - 1);
  };
  std::vector<std::array<int, 6>> hexagons;
  std::vector<clarkit::Edge> edges;
  for (auto [q, r] : cells) {
    int cx = q * (off[0].first + off[1].first) + r * (off[1].first + off[2].first);
    int cy = q * (off[0].second + off[1].second) + r * (off[1].second + off[2].second);
    std::array<int, 6> hex{};
    for (int c = 0; c < 6; ++c)
      hex[c] = point_id({cx + off[c].first, cy + off[c].second});
    hexagons.push_back(hex);
    for (int c = 0; c < 6; ++c)
      edges.push_back(clarkit::make_edge(hex[c], hex[(c + 1) % 6]));
  }
  return clarkit::BenzenoidGraph::from_parts(static_cast<int>(points.size()),
                                             std::move(edges), std::move(hexagons));
}

}  // namespace test_support
