#pragma once

#include <string>
#include <vector>

#include "tswap/tree.hpp"

namespace tswap {

/// AHU encoding of the tree rooted at its center; for two centers the
/// smaller of the two encodings. Equal strings mean isomorphic trees.
std::string canonical_form(const Tree& tree);

/// One representative per isomorphism class of trees on exactly n vertices,
/// ordered by canonical form. Built by hanging a leaf on every vertex of
/// every tree with n-1 vertices.
std::vector<Tree> enumerate_free_trees(int n);

}  // namespace tswap
