#pragma once

#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "clarkit/benzenoid_graph.hpp"
#include "clarkit/clar.hpp"
#include "clarkit/tk_family.hpp"

namespace clarkit {

inline constexpr int kHexagonEnumerationCap = 8;
inline constexpr int kFamilyBGenerationCap = 13;

// Derivation showing how a graph is produced by the extremal family's
// inductive definition: small bases, angular T_k shapes, or a three-hexagon
// unit fused onto a smaller member along a free edge.
struct FamilyBWitness {
  enum class Kind { BaseSmall, BaseTk, Glued };

  Kind kind = Kind::BaseSmall;
  int base_hexagons = 0;                       // BaseSmall: 1, 2 or 3
  std::optional<TkDescriptor> tk;              // BaseTk
  std::pair<int, int> angular_hexagons{-1, -1};  // BaseTk: hexagons at v2, v2k
  Edge identified_edge{-1, -1};                // Glued: fused edge, in parent-graph ids
  std::array<int, 3> added_hexagons{-1, -1, -1};  // Glued: ids in the current graph
  std::unique_ptr<FamilyBWitness> parent;      // Glued: derivation of the smaller member
};

// Non-empty iff the dualist tree is a T_k and the hexagons at spine
// positions 2 and 2k are both angular; exactly then a T_k-shaped benzenoid
// attains the Clar upper bound.
std::optional<std::pair<TkDescriptor, std::pair<int, int>>> tk_extremal_check(
    const BenzenoidGraph& graph);

// Membership test for the extremal family, with a derivation witness.
std::optional<FamilyBWitness> is_in_family_b(const BenzenoidGraph& graph);

// All family members with exactly n hexagons, up to isomorphism, sorted by
// canonical code.
std::vector<BenzenoidSpec> gen_family_b(int n, int cap = kFamilyBGenerationCap);

// Extends the graph by k hexagons in a straight line off hexagon h0, which
// must currently touch at most one other hexagon. The Clar number is
// unchanged by this operation.
BenzenoidGraph append_linear_chain(const BenzenoidGraph& graph, int h0, int k);

// A spec with n hexagons whose Clar number is exactly c, for any
// 1 <= c <= independence_bound(n): a minimal extremal core padded with a
// linear chain.
BenzenoidSpec construct_with_clar(int n, int c);

// Deterministic family member with n hexagons (n >= 1).
BenzenoidSpec canonical_family_b_member(int n);

// Canonical T_k-shaped spec with the two flagged hexagons angular.
BenzenoidSpec tk_benzenoid_spec(int k);

// All catacondensed specs with n hexagons up to isomorphism, sorted by
// canonical code. Includes helicenic geometries.
std::vector<BenzenoidSpec> enumerate_catacondensed(int n,
                                                   int cap = kHexagonEnumerationCap);

// Uniform random growth: each step fuses a hexagon at a uniformly chosen
// free side slot.
BenzenoidSpec random_catacondensed_spec(int n, std::mt19937& rng);

struct TheoremCounterexample {
  BenzenoidSpec spec;
  int clar = 0;
  int bound = 0;
  bool family_member = false;
};

struct VerificationReport {
  int n = 0;
  int total = 0;
  int extremal = 0;
  std::vector<TheoremCounterexample> counterexamples;
};

// Checks, over every catacondensed benzenoid with n hexagons, that the
// Clar number never exceeds floor((2n+1)/3) and attains it exactly for the
// family members.
VerificationReport verify_main_theorem(int n, int cap = kHexagonEnumerationCap);

}  // namespace clarkit
