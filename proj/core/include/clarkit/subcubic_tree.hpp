#pragma once

#include <utility>
#include <vector>

namespace clarkit {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Unrooted tree with maximum degree 3. Node ids are 0..node_count()-1.
// Construction validates connectivity, acyclicity and the degree bound.
class SubcubicTree {
 public:
  SubcubicTree(int node_count, std::vector<Edge> edges);

  static SubcubicTree path(int node_count);
  static SubcubicTree star(int leaf_count);

  int node_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool is_leaf(int v) const;
  std::vector<int> leaves() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline constexpr int kMisEnumerationCap = 30;

// floor((2n+1)/3). The independence number of a subcubic tree on n nodes
// never exceeds this value.
int independence_bound(int node_count);

// Exact independence number via the two-state tree DP.
int alpha(const SubcubicTree& tree);

// Independence number restricted to the forest induced by the nodes with
// active[v] == true.
int alpha_on_subset(const SubcubicTree& tree, const std::vector<bool>& active);

// A maximum independent set containing every leaf. Defined for every tree
// with at least two nodes except the single edge, whose two leaves are
// adjacent and cannot both be picked.
std::vector<int> leaf_containing_mis(const SubcubicTree& tree);

// node_count - alpha (Gallai identity); equals the minimum vertex cover size.
int vertex_cover_size(const SubcubicTree& tree);

// Every maximum independent set, each sorted, list sorted lexicographically.
std::vector<std::vector<int>> enumerate_mis(const SubcubicTree& tree,
                                            int node_cap = kMisEnumerationCap);

}  // namespace clarkit
