#include "clarkit/tree_canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "clarkit/errors.hpp"

namespace clarkit {

namespace {

std::vector<int> tree_centers(const SubcubicTree& tree) {
  int n = tree.node_count();
  if (n == 1) return {0};
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = tree.degree(v);
  std::vector<int> layer;
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int w : tree.neighbors(v))
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

std::string rooted_code(const SubcubicTree& tree, int root) {
  std::function<std::string(int, int)> code = [&](int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : tree.neighbors(v))
      if (w != parent) child_codes.push_back(code(w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "(";
    for (const auto& c : child_codes) out += c;
    out += ")";
    return out;
  };
  return code(root, -1);
}

}  // namespace

std::string tree_canonical_code(const SubcubicTree& tree) {
  std::string best;
  for (int c : tree_centers(tree)) {
    auto code = rooted_code(tree, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<SubcubicTree> enumerate_subcubic_trees(int node_count) {
  if (node_count < 1) throw InvalidArgumentError("node count must be positive");
  std::vector<SubcubicTree> level{SubcubicTree(1, {})};
  for (int size = 2; size <= node_count; ++size) {
    std::map<std::string, SubcubicTree> next;
    for (const auto& tree : level) {
      for (int v = 0; v < tree.node_count(); ++v) {
        if (tree.degree(v) >= 3) continue;
        auto edges = tree.edges();
        edges.push_back({v, size - 1});
        SubcubicTree grown(size, std::move(edges));
        auto code = tree_canonical_code(grown);
        next.try_emplace(std::move(code), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, tree] : next) level.push_back(std::move(tree));
  }
  return level;
}

SubcubicTree random_subcubic_tree(int node_count, std::mt19937& rng) {
  if (node_count < 1) throw InvalidArgumentError("node count must be positive");
  std::vector<Edge> edges;
  std::vector<int> deg(node_count, 0);
  std::vector<int> open{0};  // nodes with degree < 3
  for (int v = 1; v < node_count; ++v) {
    std::uniform_int_distribution<size_t> pick(0, open.size() - 1);
    size_t idx = pick(rng);
    int host = open[idx];
    edges.push_back({host, v});
    if (++deg[host] == 3) {
      open[idx] = open.back();
      open.pop_back();
    }
    deg[v] = 1;
    open.push_back(v);
  }
  return SubcubicTree(node_count, std::move(edges));
}

}  // namespace clarkit
