#include "clarkit/clar.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "clarkit/errors.hpp"

namespace clarkit {

ClarBoundInfo clar_bound_info(const BenzenoidGraph& graph) {
  auto tree = dualist_tree(graph);
  ClarBoundInfo info;
  info.hexagon_count = graph.hexagon_count();
  info.tree_alpha = alpha(tree);
  info.formula_bound = independence_bound(info.hexagon_count);
  info.bound = std::min(info.tree_alpha, info.formula_bound);
  return info;
}

int clar_upper_bound(const BenzenoidGraph& graph) { return clar_bound_info(graph).bound; }

namespace {

// Lexicographic scan of the independent sets of a given size in the
// dualist tree; stops at the first set the oracle accepts. Prunes with the
// independence number of the still-eligible forest.
template <typename Oracle>
bool first_feasible_set(const SubcubicTree& tree, int size, Oracle&& oracle,
                        std::vector<int>& chosen) {
  int n = tree.node_count();
  std::vector<int> blocked(n, 0);
  chosen.clear();

  auto recurse = [&](auto&& self, int next) -> bool {
    if (static_cast<int>(chosen.size()) == size) return oracle(chosen);
    std::vector<bool> eligible(n, false);
    for (int v = next; v < n; ++v) eligible[v] = blocked[v] == 0;
    if (static_cast<int>(chosen.size()) + alpha_on_subset(tree, eligible) < size)
      return false;
    for (int v = next; v < n; ++v) {
      if (blocked[v]) continue;
      chosen.push_back(v);
      ++blocked[v];
      for (int w : tree.neighbors(v)) ++blocked[w];
      if (self(self, v + 1)) return true;
      chosen.pop_back();
      --blocked[v];
      for (int w : tree.neighbors(v)) --blocked[w];
    }
    return false;
  };
  return recurse(recurse, 0);
}

PerfectMatching assemble_witness(const BenzenoidGraph& graph,
                                 const std::vector<int>& clar_set,
                                 const PerfectMatching& residual) {
  PerfectMatching witness = residual;
  for (int h : clar_set)
    for (int side = 0; side < 6; side += 2) witness.edges.push_back(graph.side_edge(h, side));
  std::sort(witness.edges.begin(), witness.edges.end());
  return witness;
}

}  // namespace

ClarCertificate clar_number(const BenzenoidGraph& graph) {
  auto tree = dualist_tree(graph);
  int upper = alpha(tree);

  std::vector<int> chosen;
  for (int size = upper; size >= 0; --size) {
    std::optional<PerfectMatching> residual;
    auto oracle = [&](const std::vector<int>& set) {
      residual = matching_after_removal(graph, set);
      return residual.has_value();
    };
    if (first_feasible_set(tree, size, oracle, chosen)) {
      ClarCertificate cert;
      cert.value = size;
      cert.clar_set = chosen;
      cert.witness = assemble_witness(graph, chosen, *residual);
      check_certificate(graph, cert);
      return cert;
    }
  }
  throw InfeasibleError("graph has no perfect matching");
}

namespace {

// Maximum pairwise-disjoint subset of the given hexagons; lexicographically
// smallest among the maximum ones.
std::vector<int> best_disjoint_subset(const BenzenoidGraph& graph,
                                      const std::vector<int>& hexagons) {
  int m = static_cast<int>(hexagons.size());
  std::vector<std::vector<bool>> conflict(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) {
    std::set<int> vi(graph.hexagon(hexagons[i]).begin(), graph.hexagon(hexagons[i]).end());
    for (int j = i + 1; j < m; ++j) {
      bool overlap = false;
      for (int v : graph.hexagon(hexagons[j])) overlap = overlap || vi.count(v);
      conflict[i][j] = conflict[j][i] = overlap;
    }
  }
  std::vector<int> best, current;
  std::vector<int> blocked(m, 0);
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) + (m - next) <= static_cast<int>(best.size()))
      return;  // even taking everything left cannot beat the incumbent
    if (next == m) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (!blocked[next]) {
      current.push_back(next);
      for (int j = next + 1; j < m; ++j)
        if (conflict[next][j]) ++blocked[j];
      self(self, next + 1);
      for (int j = next + 1; j < m; ++j)
        if (conflict[next][j]) --blocked[j];
      current.pop_back();
    }
    self(self, next + 1);
  };
  recurse(recurse, 0);
  std::vector<int> out;
  for (int idx : best) out.push_back(hexagons[idx]);
  return out;
}

}  // namespace

ClarCertificate clar_number_bruteforce(const BenzenoidGraph& graph, int vertex_cap) {
  auto matchings = enumerate_perfect_matchings(graph, vertex_cap);
  if (matchings.empty()) throw InfeasibleError("graph has no perfect matching");

  ClarCertificate best;
  best.value = -1;
  for (const auto& m : matchings) {
    auto alternating = alternating_hexagons(graph, m);
    auto subset = best_disjoint_subset(graph, alternating);
    int value = static_cast<int>(subset.size());
    if (value > best.value ||
        (value == best.value && subset < best.clar_set)) {
      best.value = value;
      best.clar_set = std::move(subset);
      best.witness = m;
    }
  }
  check_certificate(graph, best);
  return best;
}

void check_certificate(const BenzenoidGraph& graph, const ClarCertificate& cert) {
  if (cert.value != static_cast<int>(cert.clar_set.size()))
    throw InvalidArgumentError("certificate value differs from Clar set size");
  std::vector<int> owner(graph.vertex_count(), -1);
  for (int h : cert.clar_set) {
    if (h < 0 || h >= graph.hexagon_count())
      throw InvalidArgumentError("certificate names an unknown hexagon");
    for (int v : graph.hexagon(h)) {
      if (owner[v] != -1)
        throw InvalidArgumentError("certificate hexagons are not pairwise disjoint");
      owner[v] = h;
    }
  }
  if (!is_perfect_matching(graph.vertex_count(), graph.edges(), cert.witness))
    throw InvalidArgumentError("certificate witness is not a perfect matching");
  std::set<Edge> matched(cert.witness.edges.begin(), cert.witness.edges.end());
  for (int h : cert.clar_set) {
    int inside = 0;
    for (int side = 0; side < 6; ++side) inside += matched.count(graph.side_edge(h, side));
    if (inside != 3)
      throw InvalidArgumentError("certificate hexagon " + std::to_string(h) +
                                 " is not alternating under the witness");
  }
}

}  // namespace clarkit
