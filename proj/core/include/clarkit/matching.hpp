#pragma once

#include <optional>
#include <vector>

#include "clarkit/benzenoid_graph.hpp"
#include "clarkit/subcubic_tree.hpp"

namespace clarkit {

inline constexpr int kMatchingVertexCap = 60;

// A set of edges saturating every vertex exactly once (Kekule structure).
struct PerfectMatching {
  std::vector<Edge> edges;

  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
};

// mate[v] = matched partner or -1. Hopcroft-Karp on bipartite inputs,
// blossom contraction otherwise (benzenoids and their subgraphs are always
// bipartite; the general route covers raw fixtures).
std::vector<int> maximum_matching(int vertex_count, const std::vector<Edge>& edges);

bool has_perfect_matching(int vertex_count, const std::vector<Edge>& edges);
bool has_perfect_matching(const BenzenoidGraph& graph);

// True iff m saturates every vertex exactly once using edges of the graph.
bool is_perfect_matching(int vertex_count, const std::vector<Edge>& edges,
                         const PerfectMatching& m);

// Every perfect matching, by backtracking on the lowest-id uncovered
// vertex; deterministic order. Throws ResourceLimitError above the cap.
std::vector<PerfectMatching> enumerate_perfect_matchings(
    int vertex_count, const std::vector<Edge>& edges,
    int vertex_cap = kMatchingVertexCap);
std::vector<PerfectMatching> enumerate_perfect_matchings(
    const BenzenoidGraph& graph, int vertex_cap = kMatchingVertexCap);

// Hexagons containing exactly 3 edges of m, ascending.
std::vector<int> alternating_hexagons(const BenzenoidGraph& graph,
                                      const PerfectMatching& m);

// Perfect matching of the graph minus all vertices of the given pairwise
// disjoint hexagons (edges in original vertex ids), or nullopt if none
// exists. Removing every vertex leaves the empty matching.
std::optional<PerfectMatching> matching_after_removal(const BenzenoidGraph& graph,
                                                      const std::vector<int>& hexagons);

}  // namespace clarkit
