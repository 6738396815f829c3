#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "clarkit/benzenoid_spec.hpp"
#include "clarkit/subcubic_tree.hpp"

namespace clarkit {

enum class HexagonKind { Terminal, Linear, Angular, Branching };

// Advisory placement of one hexagon on the triangular lattice: integer
// center coordinates plus the absolute direction its local side 0 faces.
struct LatticePlacement {
  int x = 0;
  int y = 0;
  int orientation = 0;
};

// Vertex/edge/hexagon incidence structure of a benzenoid. Hexagons are
// stored as 6-tuples in local corner order: corner i and corner i+1 (mod 6)
// are the endpoints of local side i, so graphs built from a spec keep the
// spec's side numbering.
class BenzenoidGraph {
 public:
  // Realizes the benzenoid described by a spec: each child hexagon is
  // fused to its parent along the named parent side (two vertex pairs
  // identified). The result has 4n+2 vertices and 5n+1 edges.
  static BenzenoidGraph build(const BenzenoidSpec& spec);

  // Fixture loader for raw incidence structures (the only way to obtain a
  // pericondensed instance). Validates every structural invariant except
  // catacondensedness.
  static BenzenoidGraph from_parts(int vertex_count, std::vector<Edge> edges,
                                   std::vector<std::array<int, 6>> hexagons);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& vertex_neighbors(int v) const;
  int degree(int v) const;

  int hexagon_count() const { return static_cast<int>(hexagons_.size()); }
  const std::vector<std::array<int, 6>>& hexagons() const { return hexagons_; }
  const std::array<int, 6>& hexagon(int h) const;
  Edge side_edge(int h, int side) const;
  const std::vector<std::pair<int, int>>& hexagon_adjacency() const {
    return hexagon_adjacency_;
  }
  std::vector<int> hexagon_neighbors(int h) const;
  // Shared edge of two adjacent hexagons.
  Edge common_edge(int ha, int hb) const;

  const std::optional<BenzenoidSpec>& source_spec() const { return source_spec_; }
  bool has_placements() const { return !placements_.empty(); }
  const std::vector<LatticePlacement>& placements() const { return placements_; }
  // True when the advisory lattice embedding collides (helicenic input):
  // two hexagons on one cell or two distinct vertices on one lattice point.
  bool has_lattice_overlap() const { return lattice_overlap_; }

 private:
  BenzenoidGraph() = default;
  void finalize_and_validate(bool require_two_connected);

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::array<int, 6>> hexagons_;
  std::vector<std::pair<int, int>> hexagon_adjacency_;
  std::optional<BenzenoidSpec> source_spec_;
  std::vector<LatticePlacement> placements_;
  bool lattice_overlap_ = false;
};

// True iff no vertex lies in three hexagons.
bool is_catacondensed(const BenzenoidGraph& graph);

// Tree on hexagon ids with the hexagon adjacency as edge set. Throws
// NotCatacondensedError on pericondensed input.
SubcubicTree dualist_tree(const BenzenoidGraph& graph);

// Terminal (<= 1 neighbor), Branching (3 neighbors), else Angular when the
// hexagon's two degree-2 vertices are adjacent and Linear when they are not.
HexagonKind hexagon_kind(const BenzenoidGraph& graph, int h);

// Edges of hexagon h whose both endpoints have degree 2.
std::vector<Edge> free_edges(const BenzenoidGraph& graph, int h);

// Every (hexagon, side) slot whose side edge has both endpoints of degree 2,
// in (hexagon, side) order. These are exactly the slots where a further
// hexagon can be fused.
std::vector<std::pair<int, int>> free_side_slots(const BenzenoidGraph& graph);

struct HexagonRemoval {
  BenzenoidGraph graph;
  std::vector<int> vertex_to_old;   // new vertex id -> old vertex id
  std::vector<int> hexagon_to_old;  // new hexagon id -> old hexagon id
  std::vector<int> old_to_new_vertex;  // -1 for removed vertices
};

// Graph left after deleting the given hexagons' vertices and all incident
// edges. Hexagons losing any vertex disappear. Throws if the remainder is
// not a valid benzenoid graph.
HexagonRemoval remove_hexagons(const BenzenoidGraph& graph,
                               const std::vector<int>& hexagons);

}  // namespace clarkit
