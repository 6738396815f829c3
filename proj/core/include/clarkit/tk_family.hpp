#pragma once

#include <map>
#include <optional>
#include <vector>

#include "clarkit/subcubic_tree.hpp"

namespace clarkit {

// The tree T_k: a path v1..v_{2k+1} with k-2 extra leaves attached at
// v4, v6, ..., v_{2k-2}. Spine positions below are 1-based; the tree has
// 3k-1 nodes and a unique maximum independent set of size 2k-1.
struct TkDescriptor {
  int k = 0;
  std::vector<int> spine;           // node ids of v1..v_{2k+1}
  std::map<int, int> extra_leaves;  // spine position -> leaf node id
};

// Builds T_k with spine ids 0..2k and extra leaves 2k+1..3k-2.
SubcubicTree make_tk(int k);

// Recognizes trees isomorphic to some T_k; returns the lexicographically
// smallest spine realizing the isomorphism, or nullopt.
std::optional<TkDescriptor> is_tk(const SubcubicTree& tree);

enum class TreeClass { IsTk, HasDoubleLeafNeighbor, NotExtremal, Small };

struct TreeClassification {
  TreeClass kind = TreeClass::NotExtremal;
  std::optional<TkDescriptor> tk;  // set when kind == IsTk
  int double_leaf_node = -1;       // set when kind == HasDoubleLeafNeighbor
};

// Classifies a subcubic tree whose independence number attains
// independence_bound(node_count); throws InvalidArgumentError otherwise.
// Trees with fewer than 3 nodes classify as Small; for n >= 3 the result
// is IsTk or HasDoubleLeafNeighbor.
TreeClassification classify_extremal_tree(const SubcubicTree& tree);

}  // namespace clarkit
