#pragma once

#include <random>
#include <string>
#include <vector>

#include "clarkit/subcubic_tree.hpp"

namespace clarkit {

// Canonical form of a free tree: AHU code of the tree rooted at its
// center, minimized over both centers when there are two. Two trees get
// the same code iff they are isomorphic.
std::string tree_canonical_code(const SubcubicTree& tree);

// All subcubic trees on node_count nodes, one per isomorphism class,
// sorted by canonical code.
std::vector<SubcubicTree> enumerate_subcubic_trees(int node_count);

// Uniform sequential-attachment tree: each new node picks a random
// existing node of degree < 3.
SubcubicTree random_subcubic_tree(int node_count, std::mt19937& rng);

}  // namespace clarkit
