#pragma once

#include <string>

#include "clarkit/benzenoid_graph.hpp"
#include "clarkit/clar.hpp"

namespace clarkit {

const char* hexagon_kind_name(HexagonKind kind);

// Fixed-width sketch of the benzenoid on the hexagonal grid. Clar hexagons
// carry a circle mark "()", witness edges are drawn with '=' (horizontal)
// and '%' (slanted). Falls back to an indented dualist-tree listing when
// the advisory lattice placement overlaps (helicenic input) or the graph
// was not built from a spec.
std::string render_ascii(const BenzenoidGraph& graph,
                         const ClarCertificate* cert = nullptr);

}  // namespace clarkit
