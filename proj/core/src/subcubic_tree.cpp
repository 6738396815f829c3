#include "clarkit/subcubic_tree.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "clarkit/errors.hpp"

namespace clarkit {

SubcubicTree::SubcubicTree(int node_count, std::vector<Edge> edges)
    : n_(node_count), edges_(std::move(edges)) {
  if (n_ <= 0) throw InvalidArgumentError("tree must have at least one node");
  if (static_cast<int>(edges_.size()) != n_ - 1)
    throw InvalidArgumentError("tree on " + std::to_string(n_) + " nodes needs " +
                               std::to_string(n_ - 1) + " edges, got " +
                               std::to_string(edges_.size()));
  for (auto& e : edges_) e = make_edge(e.first, e.second);
  std::sort(edges_.begin(), edges_.end());
  adj_.assign(n_, {});
  std::set<Edge> seen;
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v >= n_ || u == v)
      throw InvalidArgumentError("edge endpoints out of range");
    if (!seen.insert({u, v}).second)
      throw InvalidArgumentError("duplicate edge in tree");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    if (adj_[v].size() > 3)
      throw InvalidArgumentError("node " + std::to_string(v) + " has degree > 3");
  }
  // n-1 edges and no duplicates: connectivity implies acyclicity.
  std::vector<bool> vis(n_, false);
  std::vector<int> stack{0};
  vis[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!vis[w]) {
        vis[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n_) throw InvalidArgumentError("tree is not connected");
}

SubcubicTree SubcubicTree::path(int node_count) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < node_count; ++i) edges.push_back({i, i + 1});
  return SubcubicTree(node_count, std::move(edges));
}

SubcubicTree SubcubicTree::star(int leaf_count) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaf_count; ++i) edges.push_back({0, i});
  return SubcubicTree(leaf_count + 1, std::move(edges));
}

const std::vector<int>& SubcubicTree::neighbors(int v) const {
  if (v < 0 || v >= n_) throw InvalidArgumentError("node id out of range");
  return adj_[v];
}

int SubcubicTree::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool SubcubicTree::is_leaf(int v) const { return degree(v) == 1; }

std::vector<int> SubcubicTree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 1) out.push_back(v);
  return out;
}

int independence_bound(int node_count) {
  if (node_count < 1) throw InvalidArgumentError("node count must be positive");
  return (2 * node_count + 1) / 3;
}

namespace {

// Parent array and a bottom-up processing order for the tree rooted at
// the smallest active node of each component.
struct RootedOrder {
  std::vector<int> parent;
  std::vector<int> order;  // every node appears after all its children
};

RootedOrder root_forest(const SubcubicTree& tree, const std::vector<bool>* active) {
  int n = tree.node_count();
  RootedOrder ro;
  ro.parent.assign(n, -1);
  ro.order.reserve(n);
  std::vector<bool> vis(n, false);
  std::vector<int> bfs;
  for (int r = 0; r < n; ++r) {
    if (vis[r] || (active && !(*active)[r])) continue;
    vis[r] = true;
    bfs.clear();
    bfs.push_back(r);
    for (size_t i = 0; i < bfs.size(); ++i) {
      int v = bfs[i];
      for (int w : tree.neighbors(v)) {
        if (vis[w] || (active && !(*active)[w])) continue;
        vis[w] = true;
        ro.parent[w] = v;
        bfs.push_back(w);
      }
    }
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) ro.order.push_back(*it);
  }
  return ro;
}

struct MisDp {
  std::vector<int> incl;  // best size with the node included
  std::vector<int> excl;  // best size with the node excluded
};

MisDp mis_dp(const SubcubicTree& tree, const RootedOrder& ro,
             const std::vector<bool>* active) {
  int n = tree.node_count();
  MisDp dp;
  dp.incl.assign(n, 1);
  dp.excl.assign(n, 0);
  for (int v : ro.order) {
    for (int w : tree.neighbors(v)) {
      if (ro.parent[w] != v) continue;
      if (active && !(*active)[w]) continue;
      dp.incl[v] += dp.excl[w];
      dp.excl[v] += std::max(dp.incl[w], dp.excl[w]);
    }
  }
  return dp;
}

}  // namespace

int alpha(const SubcubicTree& tree) {
  auto ro = root_forest(tree, nullptr);
  auto dp = mis_dp(tree, ro, nullptr);
  int total = 0;
  for (int v = 0; v < tree.node_count(); ++v)
    if (ro.parent[v] == -1) total += std::max(dp.incl[v], dp.excl[v]);
  return total;
}

int alpha_on_subset(const SubcubicTree& tree, const std::vector<bool>& active) {
  auto ro = root_forest(tree, &active);
  auto dp = mis_dp(tree, ro, &active);
  int total = 0;
  for (int v = 0; v < tree.node_count(); ++v)
    if (active[v] && ro.parent[v] == -1) total += std::max(dp.incl[v], dp.excl[v]);
  return total;
}

std::vector<int> leaf_containing_mis(const SubcubicTree& tree) {
  int n = tree.node_count();
  if (n < 2)
    throw InvalidArgumentError("leaf_containing_mis needs a tree with more than one node");
  if (n == 2)
    throw InvalidArgumentError(
        "the two leaves of a single edge are adjacent; no maximum independent "
        "set contains both");

  auto ro = root_forest(tree, nullptr);
  auto dp = mis_dp(tree, ro, nullptr);

  // Reconstruct one maximum independent set, preferring leaves on ties.
  std::vector<bool> in_set(n, false);
  std::vector<std::pair<int, bool>> stack;  // (node, may_include)
  for (int v = n - 1; v >= 0; --v)
    if (ro.parent[v] == -1) stack.push_back({v, true});
  while (!stack.empty()) {
    auto [v, may_include] = stack.back();
    stack.pop_back();
    bool take = may_include &&
                (dp.incl[v] > dp.excl[v] || (dp.incl[v] == dp.excl[v] && tree.is_leaf(v)));
    in_set[v] = take;
    for (int w : tree.neighbors(v))
      if (ro.parent[w] == v) stack.push_back({w, !take});
  }

  // Swap rules: a missing leaf's neighbour must be in the set, or the set
  // was not maximum; exchanging them adds the leaf without shrinking the set.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      if (!tree.is_leaf(u) || in_set[u]) continue;
      int v = tree.neighbors(u)[0];
      if (in_set[v]) {
        in_set[v] = false;
        in_set[u] = true;
      } else {
        in_set[u] = true;  // unreachable for a maximum set
      }
      changed = true;
    }
  }

  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (in_set[v]) out.push_back(v);
  return out;
}

int vertex_cover_size(const SubcubicTree& tree) {
  return tree.node_count() - alpha(tree);
}

namespace {

using SetList = std::vector<std::vector<int>>;

// All optimum sets for the subtree at v, split by whether v itself is in.
// Output-sensitive: list sizes equal the number of such sets.
struct NodeSets {
  SetList with_v;
  SetList without_v;
};

void cartesian_append(SetList& acc, const SetList& next) {
  SetList out;
  out.reserve(acc.size() * next.size());
  for (const auto& a : acc)
    for (const auto& b : next) {
      auto merged = a;
      merged.insert(merged.end(), b.begin(), b.end());
      out.push_back(std::move(merged));
    }
  acc = std::move(out);
}

}  // namespace

std::vector<std::vector<int>> enumerate_mis(const SubcubicTree& tree, int node_cap) {
  int n = tree.node_count();
  if (n > node_cap)
    throw ResourceLimitError("enumerate_mis: tree has " + std::to_string(n) +
                             " nodes, cap is " + std::to_string(node_cap));

  auto ro = root_forest(tree, nullptr);
  auto dp = mis_dp(tree, ro, nullptr);

  std::vector<NodeSets> sets(n);
  for (int v : ro.order) {
    SetList with_v{{v}};
    SetList without_v{{}};
    for (int w : tree.neighbors(v)) {
      if (ro.parent[w] != v) continue;
      cartesian_append(with_v, sets[w].without_v);
      SetList best;
      if (dp.incl[w] >= dp.excl[w])
        best.insert(best.end(), sets[w].with_v.begin(), sets[w].with_v.end());
      if (dp.excl[w] >= dp.incl[w])
        best.insert(best.end(), sets[w].without_v.begin(), sets[w].without_v.end());
      cartesian_append(without_v, best);
      sets[w] = {};  // free child lists early
    }
    sets[v] = {std::move(with_v), std::move(without_v)};
  }

  SetList result{{}};
  for (int v = 0; v < n; ++v) {
    if (ro.parent[v] != -1) continue;
    SetList best;
    if (dp.incl[v] >= dp.excl[v])
      best.insert(best.end(), sets[v].with_v.begin(), sets[v].with_v.end());
    if (dp.excl[v] >= dp.incl[v])
      best.insert(best.end(), sets[v].without_v.begin(), sets[v].without_v.end());
    cartesian_append(result, best);
  }
  for (auto& s : result) std::sort(s.begin(), s.end());
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace clarkit
