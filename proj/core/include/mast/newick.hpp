// Canonical Newick-like serialization. Leaves render as L<k>, STAR, BULLET
// (split tokens as B<id>). The tree is written rooted at the edge incident
// to the smallest label, children ordered by smallest contained label, and
// terminated by ';'. Equivalent trees serialize identically; the parser
// accepts arbitrary child order and re-canonicalizes on output.
#ifndef MAST_NEWICK_HPP
#define MAST_NEWICK_HPP

#include <string>

#include "mast/binary_tree.hpp"

namespace mast {

std::string to_newick(const BinaryTree& t);

/// Parses a serialized tree. Accepts a bare leaf ("L1;"), an edge-rooted
/// form ("(L1,(L2,L3));") or a branch-point-rooted form ("(L1,L2,L3);").
/// Throws std::invalid_argument on malformed input.
BinaryTree from_newick(const std::string& text);

}  // namespace mast

#endif
