#include "clarkit/tk_family.hpp"

#include <algorithm>
#include <string>

#include "clarkit/errors.hpp"

namespace clarkit {

SubcubicTree make_tk(int k) {
  if (k < 2) throw InvalidArgumentError("make_tk requires k >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 <= 2 * k; ++i) edges.push_back({i, i + 1});
  // v_{4+2j} has id 3+2j; extra leaves get ids 2k+1..3k-2.
  for (int j = 0; j < k - 2; ++j) edges.push_back({3 + 2 * j, 2 * k + 1 + j});
  return SubcubicTree(3 * k - 1, std::move(edges));
}

namespace {

std::optional<TkDescriptor> descriptor_for_spine(const SubcubicTree& tree,
                                                 const std::vector<int>& spine, int k) {
  int n = tree.node_count();
  std::vector<int> pos(n, 0);  // 1-based spine position, 0 = off spine
  for (int i = 0; i < static_cast<int>(spine.size()); ++i) pos[spine[i]] = i + 1;

  TkDescriptor d;
  d.k = k;
  d.spine = spine;
  for (int i = 1; i <= 2 * k + 1; ++i) {
    int v = spine[i - 1];
    bool branch_pos = (i % 2 == 0 && i >= 4 && i <= 2 * k - 2);
    int want = (i == 1 || i == 2 * k + 1) ? 1 : (branch_pos ? 3 : 2);
    if (tree.degree(v) != want) return std::nullopt;
    if (branch_pos) {
      int leaf = -1;
      for (int w : tree.neighbors(v))
        if (pos[w] == 0) leaf = w;
      if (leaf == -1 || !tree.is_leaf(leaf)) return std::nullopt;
      d.extra_leaves[i] = leaf;
    }
  }
  // Degree checks pin every off-spine node to an attached leaf; the node
  // count 3k-1 then accounts for all of them.
  return d;
}

}  // namespace

std::optional<TkDescriptor> is_tk(const SubcubicTree& tree) {
  int n = tree.node_count();
  if (n % 3 != 2 || n < 5) return std::nullopt;
  int k = (n + 1) / 3;
  int spine_nodes = 2 * k + 1;

  auto leaves = tree.leaves();
  std::optional<TkDescriptor> best;
  for (int a : leaves) {
    // BFS parents from a.
    std::vector<int> parent(n, -2);
    parent[a] = -1;
    std::vector<int> queue{a};
    for (size_t i = 0; i < queue.size(); ++i)
      for (int w : tree.neighbors(queue[i]))
        if (parent[w] == -2) {
          parent[w] = queue[i];
          queue.push_back(w);
        }
    for (int b : leaves) {
      if (b == a) continue;
      std::vector<int> path;
      for (int v = b; v != -1; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      if (static_cast<int>(path.size()) != spine_nodes) continue;
      auto d = descriptor_for_spine(tree, path, k);
      if (d && (!best || d->spine < best->spine)) best = std::move(d);
    }
  }
  return best;
}

TreeClassification classify_extremal_tree(const SubcubicTree& tree) {
  int n = tree.node_count();
  if (alpha(tree) != independence_bound(n))
    throw InvalidArgumentError(
        "classify_extremal_tree: independence number does not attain the bound");

  TreeClassification out;
  if (n < 3) {
    out.kind = TreeClass::Small;
    return out;
  }
  if (auto tk = is_tk(tree)) {
    out.kind = TreeClass::IsTk;
    out.tk = std::move(tk);
    return out;
  }
  for (int v = 0; v < n; ++v) {
    int leaf_neighbors = 0;
    for (int w : tree.neighbors(v))
      if (tree.is_leaf(w)) ++leaf_neighbors;
    if (leaf_neighbors >= 2) {
      out.kind = TreeClass::HasDoubleLeafNeighbor;
      out.double_leaf_node = v;
      return out;
    }
  }
  out.kind = TreeClass::NotExtremal;
  return out;
}

}  // namespace clarkit
