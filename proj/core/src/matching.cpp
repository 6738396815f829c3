#include "clarkit/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "clarkit/errors.hpp"

namespace clarkit {

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

// 2-coloring, or empty if an odd cycle exists.
std::vector<int> bipartite_coloring(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (size_t i = 0; i < queue.size(); ++i)
      for (int w : adj[queue[i]]) {
        if (color[w] == -1) {
          color[w] = color[queue[i]] ^ 1;
          queue.push_back(w);
        } else if (color[w] == color[queue[i]]) {
          return {};
        }
      }
  }
  return color;
}

// Hopcroft-Karp layered augmentation over the given 2-coloring.
std::vector<int> hopcroft_karp(int n, const std::vector<std::vector<int>>& adj,
                               const std::vector<int>& color) {
  constexpr int kInf = 1 << 29;
  std::vector<int> mate(n, -1), dist(n);
  std::vector<int> left;
  for (int v = 0; v < n; ++v)
    if (color[v] == 0) left.push_back(v);

  auto bfs = [&]() {
    std::queue<int> q;
    for (int u : left) {
      if (mate[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool reachable = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        int next = mate[w];
        if (next == -1) {
          reachable = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[u] + 1;
          q.push(next);
        }
      }
    }
    return reachable;
  };

  std::vector<std::pair<int, size_t>> stack;
  auto dfs = [&](int root) {
    stack.clear();
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      if (idx >= adj[u].size()) {
        dist[u] = kInf;
        stack.pop_back();
        continue;
      }
      int w = adj[u][idx++];
      int next = mate[w];
      if (next == -1) {
        // Augment along the stack.
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          int uu = it->first;
          int prev = mate[uu];
          mate[uu] = w;
          mate[w] = uu;
          w = prev;
        }
        return true;
      }
      if (dist[next] == dist[u] + 1) stack.push_back({next, 0});
    }
    return false;
  };

  while (bfs())
    for (int u : left)
      if (mate[u] == -1) dfs(u);
  return mate;
}

// Maximum matching in a general graph via blossom contraction.
std::vector<int> blossom_matching(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> mate(n, -1), parent(n), base(n);
  std::vector<bool> used(n), blossom(n);

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[mate[v]]] = true;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };

  auto lowest_common_base = [&](int a, int b) {
    std::vector<bool> seen(n, false);
    int x = a;
    while (true) {
      x = base[x];
      seen[x] = true;
      if (mate[x] == -1) break;
      x = parent[mate[x]];
    }
    int y = b;
    while (true) {
      y = base[y];
      if (seen[y]) return y;
      y = parent[mate[y]];
    }
  };

  auto find_augmenting_path = [&](int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[v]) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
          int cur = lowest_common_base(v, to);
          std::fill(blossom.begin(), blossom.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (mate[to] == -1) return to;
          used[mate[to]] = true;
          q.push(mate[to]);
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (mate[v] != -1) continue;
    int u = find_augmenting_path(v);
    while (u != -1) {
      int pv = parent[u];
      int ppv = mate[pv];
      mate[u] = pv;
      mate[pv] = u;
      u = ppv;
    }
  }
  return mate;
}

}  // namespace

std::vector<int> maximum_matching(int vertex_count, const std::vector<Edge>& edges) {
  auto adj = adjacency(vertex_count, edges);
  auto color = bipartite_coloring(vertex_count, adj);
  if (!color.empty()) return hopcroft_karp(vertex_count, adj, color);
  return blossom_matching(vertex_count, adj);
}

bool has_perfect_matching(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count == 0) return true;
  if (vertex_count % 2 != 0) return false;
  auto mate = maximum_matching(vertex_count, edges);
  return std::count(mate.begin(), mate.end(), -1) == 0;
}

bool has_perfect_matching(const BenzenoidGraph& graph) {
  return has_perfect_matching(graph.vertex_count(), graph.edges());
}

bool is_perfect_matching(int vertex_count, const std::vector<Edge>& edges,
                         const PerfectMatching& m) {
  std::set<Edge> edge_set(edges.begin(), edges.end());
  std::vector<int> covered(vertex_count, 0);
  for (auto [u, v] : m.edges) {
    if (!edge_set.count(make_edge(u, v))) return false;
    ++covered[u];
    ++covered[v];
  }
  return std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; });
}

std::vector<PerfectMatching> enumerate_perfect_matchings(int vertex_count,
                                                         const std::vector<Edge>& edges,
                                                         int vertex_cap) {
  if (vertex_count > vertex_cap)
    throw ResourceLimitError("enumerate_perfect_matchings: " +
                             std::to_string(vertex_count) + " vertices, cap is " +
                             std::to_string(vertex_cap));
  std::vector<PerfectMatching> out;
  if (vertex_count % 2 != 0) return out;
  auto adj = adjacency(vertex_count, edges);

  std::vector<bool> covered(vertex_count, false);
  std::vector<Edge> chosen;
  auto backtrack = [&](auto&& self, int covered_count) -> void {
    if (covered_count == vertex_count) {
      out.push_back({chosen});
      return;
    }
    int v = 0;
    while (covered[v]) ++v;
    covered[v] = true;
    for (int w : adj[v]) {
      if (covered[w]) continue;
      covered[w] = true;
      chosen.push_back({v, w});
      self(self, covered_count + 2);
      chosen.pop_back();
      covered[w] = false;
    }
    covered[v] = false;
  };
  backtrack(backtrack, 0);
  return out;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const BenzenoidGraph& graph,
                                                         int vertex_cap) {
  return enumerate_perfect_matchings(graph.vertex_count(), graph.edges(), vertex_cap);
}

std::vector<int> alternating_hexagons(const BenzenoidGraph& graph,
                                      const PerfectMatching& m) {
  if (!is_perfect_matching(graph.vertex_count(), graph.edges(), m))
    throw InvalidArgumentError("alternating_hexagons: not a perfect matching");
  std::set<Edge> matched(m.edges.begin(), m.edges.end());
  std::vector<int> out;
  for (int h = 0; h < graph.hexagon_count(); ++h) {
    int inside = 0;
    for (int side = 0; side < 6; ++side) inside += matched.count(graph.side_edge(h, side));
    if (inside == 3) out.push_back(h);
  }
  return out;
}

std::optional<PerfectMatching> matching_after_removal(const BenzenoidGraph& graph,
                                                      const std::vector<int>& hexagons) {
  std::vector<int> owner(graph.vertex_count(), -1);
  for (int h : hexagons) {
    if (h < 0 || h >= graph.hexagon_count())
      throw InvalidArgumentError("hexagon id out of range");
    for (int v : graph.hexagon(h)) {
      if (owner[v] != -1)
        throw InvalidArgumentError("hexagons " + std::to_string(owner[v]) + " and " +
                                   std::to_string(h) + " are not disjoint");
      owner[v] = h;
    }
  }

  std::vector<int> to_sub(graph.vertex_count(), -1);
  std::vector<int> to_full;
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (owner[v] == -1) {
      to_sub[v] = static_cast<int>(to_full.size());
      to_full.push_back(v);
    }
  std::vector<Edge> sub_edges;
  for (const auto& [u, v] : graph.edges())
    if (to_sub[u] != -1 && to_sub[v] != -1)
      sub_edges.push_back({to_sub[u], to_sub[v]});

  int sub_n = static_cast<int>(to_full.size());
  if (sub_n == 0) return PerfectMatching{};
  if (sub_n % 2 != 0) return std::nullopt;

  auto mate = maximum_matching(sub_n, sub_edges);
  if (std::count(mate.begin(), mate.end(), -1) != 0) return std::nullopt;
  PerfectMatching m;
  for (int v = 0; v < sub_n; ++v)
    if (mate[v] > v) m.edges.push_back(make_edge(to_full[v], to_full[mate[v]]));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace clarkit
