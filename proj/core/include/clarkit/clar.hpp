#pragma once

#include <vector>

#include "clarkit/benzenoid_graph.hpp"
#include "clarkit/matching.hpp"

namespace clarkit {

// An exact Clar-number result: a maximum independent set of hexagons
// together with a perfect matching of the whole graph under which every
// set member is alternating.
struct ClarCertificate {
  int value = 0;
  std::vector<int> clar_set;
  PerfectMatching witness;
};

struct ClarBoundInfo {
  int hexagon_count = 0;
  int tree_alpha = 0;     // independence number of the dualist tree
  int formula_bound = 0;  // floor((2n+1)/3)
  int bound = 0;          // min of the two
};

ClarBoundInfo clar_bound_info(const BenzenoidGraph& graph);
int clar_upper_bound(const BenzenoidGraph& graph);

// Exact Clar number with certificate. Iterates independent hexagon sets of
// the dualist tree by decreasing size from the upper bound; a set is
// feasible when the graph minus its hexagons still has a perfect matching.
// Returns the lexicographically smallest Clar set of maximum size.
ClarCertificate clar_number(const BenzenoidGraph& graph);

// Independent oracle: scans every perfect matching and every independent
// subset of its alternating hexagons. Throws ResourceLimitError when the
// graph exceeds the vertex cap.
ClarCertificate clar_number_bruteforce(const BenzenoidGraph& graph,
                                       int vertex_cap = kMatchingVertexCap);

// Re-validates a certificate against the graph; throws on any violation.
void check_certificate(const BenzenoidGraph& graph, const ClarCertificate& cert);

}  // namespace clarkit
