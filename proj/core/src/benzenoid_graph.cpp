#include "clarkit/benzenoid_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "clarkit/errors.hpp"

namespace clarkit {

namespace {

// Triangular-lattice offsets of the six hexagon corners / neighbor
// directions, counterclockwise. The center across side d sits at
// off[d] + off[d+1]; corner c of a hexagon with orientation w sits at
// center + off[(w + c) % 6].
constexpr std::array<std::pair<int, int>, 6> kOffsets = {
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

BenzenoidGraph BenzenoidGraph::build(const BenzenoidSpec& spec) {
  spec.validate();
  int n = spec.hexagons;

  BenzenoidGraph g;
  g.source_spec_ = spec;
  g.placements_.assign(n, {});

  // Glue corner slots: child corners 0,1 coincide with parent corners
  // s+1,s of the shared side (corner order reverses across the edge).
  Dsu dsu(6 * n);
  auto slot = [](int h, int c) { return h * 6 + c; };
  for (const auto& a : spec.attachments_in_build_order()) {
    const auto& pp = g.placements_[a.parent];
    int dir = (pp.orientation + a.side) % 6;
    auto& cp = g.placements_[a.child];
    cp.x = pp.x + kOffsets[dir].first + kOffsets[(dir + 1) % 6].first;
    cp.y = pp.y + kOffsets[dir].second + kOffsets[(dir + 1) % 6].second;
    cp.orientation = (dir + 3) % 6;
    dsu.unite(slot(a.child, 0), slot(a.parent, (a.side + 1) % 6));
    dsu.unite(slot(a.child, 1), slot(a.parent, a.side));
  }

  // Vertex ids in first-seen slot order.
  std::vector<int> slot_vertex(6 * n, -1);
  g.hexagons_.assign(n, {});
  for (int h = 0; h < n; ++h)
    for (int c = 0; c < 6; ++c) {
      int root = dsu.find(slot(h, c));
      if (slot_vertex[root] == -1) slot_vertex[root] = g.vertex_count_++;
      g.hexagons_[h][c] = slot_vertex[root];
    }

  std::set<Edge> edge_set;
  for (int h = 0; h < n; ++h)
    for (int c = 0; c < 6; ++c)
      edge_set.insert(make_edge(g.hexagons_[h][c], g.hexagons_[h][(c + 1) % 6]));
  g.edges_.assign(edge_set.begin(), edge_set.end());

  // Advisory lattice overlap: distinct vertices on one lattice point or
  // two hexagons on one cell.
  std::map<std::pair<int, int>, int> point_vertex;
  for (int h = 0; h < n; ++h) {
    const auto& pl = g.placements_[h];
    for (int c = 0; c < 6; ++c) {
      auto off = kOffsets[(pl.orientation + c) % 6];
      std::pair<int, int> pos{pl.x + off.first, pl.y + off.second};
      auto [it, fresh] = point_vertex.try_emplace(pos, g.hexagons_[h][c]);
      if (!fresh && it->second != g.hexagons_[h][c]) g.lattice_overlap_ = true;
    }
  }
  std::set<std::pair<int, int>> centers;
  for (const auto& pl : g.placements_)
    if (!centers.insert({pl.x, pl.y}).second) g.lattice_overlap_ = true;

  g.finalize_and_validate(true);
  return g;
}

BenzenoidGraph BenzenoidGraph::from_parts(int vertex_count, std::vector<Edge> edges,
                                          std::vector<std::array<int, 6>> hexagons) {
  BenzenoidGraph g;
  g.vertex_count_ = vertex_count;
  for (auto& e : edges) e = make_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);
  g.hexagons_ = std::move(hexagons);
  g.finalize_and_validate(true);
  return g;
}

void BenzenoidGraph::finalize_and_validate(bool require_two_connected) {
  if (vertex_count_ <= 0) throw InvalidArgumentError("graph has no vertices");
  adj_.assign(vertex_count_, {});
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v >= vertex_count_ || u == v)
      throw InvalidArgumentError("edge endpoints out of range");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  // Every hexagon must be a 6-cycle over existing edges.
  for (int h = 0; h < hexagon_count(); ++h) {
    std::set<int> distinct(hexagons_[h].begin(), hexagons_[h].end());
    if (distinct.size() != 6)
      throw InvalidArgumentError("hexagon " + std::to_string(h) +
                                 " does not have six distinct vertices");
    for (int c = 0; c < 6; ++c)
      if (!has_edge(hexagons_[h][c], hexagons_[h][(c + 1) % 6]))
        throw InvalidArgumentError("hexagon " + std::to_string(h) +
                                   " is not a cycle in the edge set");
  }

  // Hexagon adjacency; no edge may lie in three hexagons.
  std::map<Edge, std::vector<int>> edge_hexagons;
  for (int h = 0; h < hexagon_count(); ++h)
    for (int c = 0; c < 6; ++c)
      edge_hexagons[side_edge(h, c)].push_back(h);
  std::set<std::pair<int, int>> adjacency;
  for (const auto& [e, hs] : edge_hexagons) {
    if (hs.size() > 2)
      throw InvalidArgumentError("an edge lies in three hexagons");
    if (hs.size() == 2) adjacency.insert({std::min(hs[0], hs[1]), std::max(hs[0], hs[1])});
  }
  hexagon_adjacency_.assign(adjacency.begin(), adjacency.end());

  // Two hexagons share nothing or exactly one edge.
  for (int a = 0; a < hexagon_count(); ++a)
    for (int b = a + 1; b < hexagon_count(); ++b) {
      std::set<int> va(hexagons_[a].begin(), hexagons_[a].end());
      int shared = 0;
      for (int v : hexagons_[b]) shared += va.count(v);
      bool adjacent = adjacency.count({a, b}) != 0;
      if (!((shared == 0 && !adjacent) || (shared == 2 && adjacent)))
        throw InvalidArgumentError("hexagons " + std::to_string(a) + " and " +
                                   std::to_string(b) +
                                   " share vertices without sharing exactly one edge");
    }

  for (int v = 0; v < vertex_count_; ++v)
    if (degree(v) < 2 || degree(v) > 3)
      throw InvalidArgumentError("vertex " + std::to_string(v) +
                                 " has degree outside {2, 3}");

  // Connected and bipartite.
  std::vector<int> color(vertex_count_, -1);
  std::vector<int> queue{0};
  color[0] = 0;
  for (size_t i = 0; i < queue.size(); ++i)
    for (int w : adj_[queue[i]]) {
      if (color[w] == -1) {
        color[w] = color[queue[i]] ^ 1;
        queue.push_back(w);
      } else if (color[w] == color[queue[i]]) {
        throw InvalidArgumentError("graph is not bipartite");
      }
    }
  if (static_cast<int>(queue.size()) != vertex_count_)
    throw InvalidArgumentError("graph is not connected");

  if (require_two_connected && vertex_count_ > 2) {
    // Articulation check (iterative lowpoint DFS from vertex 0).
    std::vector<int> disc(vertex_count_, -1), low(vertex_count_, 0),
        parent(vertex_count_, -1), child_count(vertex_count_, 0);
    std::vector<std::pair<int, size_t>> stack{{0, 0}};
    int timer = 0;
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < adj_[v].size()) {
        int w = adj_[v][idx++];
        if (disc[w] == -1) {
          parent[w] = v;
          ++child_count[v];
          disc[w] = low[w] = timer++;
          stack.push_back({w, 0});
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (parent[v] != -1) {
          low[parent[v]] = std::min(low[parent[v]], low[v]);
          if (parent[parent[v]] != -1 && low[v] >= disc[parent[v]])
            throw InvalidArgumentError("graph is not 2-connected");
        }
      }
    }
    if (child_count[0] > 1) throw InvalidArgumentError("graph is not 2-connected");
  }
}

bool BenzenoidGraph::has_edge(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& BenzenoidGraph::vertex_neighbors(int v) const {
  if (v < 0 || v >= vertex_count_) throw InvalidArgumentError("vertex id out of range");
  return adj_[v];
}

int BenzenoidGraph::degree(int v) const {
  return static_cast<int>(vertex_neighbors(v).size());
}

const std::array<int, 6>& BenzenoidGraph::hexagon(int h) const {
  if (h < 0 || h >= hexagon_count()) throw InvalidArgumentError("hexagon id out of range");
  return hexagons_[h];
}

Edge BenzenoidGraph::side_edge(int h, int side) const {
  const auto& hex = hexagon(h);
  return make_edge(hex[side % 6], hex[(side + 1) % 6]);
}

std::vector<int> BenzenoidGraph::hexagon_neighbors(int h) const {
  std::vector<int> out;
  for (const auto& [a, b] : hexagon_adjacency_) {
    if (a == h) out.push_back(b);
    if (b == h) out.push_back(a);
  }
  return out;
}

Edge BenzenoidGraph::common_edge(int ha, int hb) const {
  std::set<Edge> a_sides;
  for (int c = 0; c < 6; ++c) a_sides.insert(side_edge(ha, c));
  for (int c = 0; c < 6; ++c)
    if (a_sides.count(side_edge(hb, c))) return side_edge(hb, c);
  throw InvalidArgumentError("hexagons " + std::to_string(ha) + " and " +
                             std::to_string(hb) + " share no edge");
}

bool is_catacondensed(const BenzenoidGraph& graph) {
  std::vector<int> hex_count(graph.vertex_count(), 0);
  for (const auto& hex : graph.hexagons())
    for (int v : hex)
      if (++hex_count[v] >= 3) return false;
  return true;
}

SubcubicTree dualist_tree(const BenzenoidGraph& graph) {
  if (!is_catacondensed(graph))
    throw NotCatacondensedError("graph has a vertex in three hexagons");
  try {
    return SubcubicTree(graph.hexagon_count(), graph.hexagon_adjacency());
  } catch (const InvalidArgumentError& e) {
    throw NotCatacondensedError(std::string("dualist graph is not a tree: ") + e.what());
  }
}

HexagonKind hexagon_kind(const BenzenoidGraph& graph, int h) {
  auto neighbors = graph.hexagon_neighbors(h);
  if (neighbors.size() <= 1) return HexagonKind::Terminal;
  if (neighbors.size() >= 3) return HexagonKind::Branching;
  std::vector<int> low;
  for (int v : graph.hexagon(h))
    if (graph.degree(v) == 2) low.push_back(v);
  if (low.size() != 2)
    throw InvalidArgumentError(
        "hexagon with two neighbors must have exactly two degree-2 vertices "
        "(is the graph catacondensed?)");
  return graph.has_edge(low[0], low[1]) ? HexagonKind::Angular : HexagonKind::Linear;
}

std::vector<Edge> free_edges(const BenzenoidGraph& graph, int h) {
  std::vector<Edge> out;
  for (int side = 0; side < 6; ++side) {
    auto [u, v] = graph.side_edge(h, side);
    if (graph.degree(u) == 2 && graph.degree(v) == 2) out.push_back({u, v});
  }
  return out;
}

std::vector<std::pair<int, int>> free_side_slots(const BenzenoidGraph& graph) {
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < graph.hexagon_count(); ++h)
    for (int side = 0; side < 6; ++side) {
      auto [u, v] = graph.side_edge(h, side);
      if (graph.degree(u) == 2 && graph.degree(v) == 2) out.push_back({h, side});
    }
  return out;
}

HexagonRemoval remove_hexagons(const BenzenoidGraph& graph,
                               const std::vector<int>& hexagons) {
  std::vector<bool> drop_vertex(graph.vertex_count(), false);
  std::set<int> dropped(hexagons.begin(), hexagons.end());
  for (int h : hexagons) {
    if (h < 0 || h >= graph.hexagon_count())
      throw InvalidArgumentError("hexagon id out of range");
    for (int v : graph.hexagon(h)) drop_vertex[v] = true;
  }

  std::vector<int> vertex_to_old;
  std::vector<int> hexagon_to_old;
  std::vector<int> old_to_new(graph.vertex_count(), -1);
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (!drop_vertex[v]) {
      old_to_new[v] = static_cast<int>(vertex_to_old.size());
      vertex_to_old.push_back(v);
    }

  std::vector<Edge> edges;
  for (const auto& [u, v] : graph.edges())
    if (!drop_vertex[u] && !drop_vertex[v])
      edges.push_back({old_to_new[u], old_to_new[v]});

  std::vector<std::array<int, 6>> hexes;
  for (int h = 0; h < graph.hexagon_count(); ++h) {
    if (dropped.count(h)) continue;
    bool alive = true;
    for (int v : graph.hexagon(h)) alive = alive && !drop_vertex[v];
    if (!alive) continue;
    std::array<int, 6> mapped{};
    for (int c = 0; c < 6; ++c) mapped[c] = old_to_new[graph.hexagon(h)[c]];
    hexes.push_back(mapped);
    hexagon_to_old.push_back(h);
  }

  return HexagonRemoval{
      BenzenoidGraph::from_parts(static_cast<int>(vertex_to_old.size()),
                                 std::move(edges), std::move(hexes)),
      std::move(vertex_to_old), std::move(hexagon_to_old), std::move(old_to_new)};
}

}  // namespace clarkit
