// Splitting a tree at a branch point into three subtrees, and locating the
// branch point to split at: the semi-centroid of a doubly-rooted tree (the
// unique branch point on the STAR-BULLET path with l1 < n/2 original leaves
// on the STAR side and l2 <= n/2 on the BULLET side) and the centroid of a
// rooted tree (every branch holds at most half of the n+1 leaves, ties
// resolved toward the vertex farthest from STAR).
#ifndef MAST_SPLITTING_HPP
#define MAST_SPLITTING_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "mast/binary_tree.hpp"
#include "mast/rng.hpp"

namespace mast {

struct SplitOutcome {
  int branch_point = -1;
  std::array<BinaryTree, 3> subtrees;
  // Original labels per branch, sorted.
  std::array<std::vector<std::int64_t>, 3> leaf_sets;
  std::array<long, 3> sizes = {0, 0, 0};
  // The fresh leaf standing in for the branch point; the same token appears
  // once in each subtree, and re-identifying the three copies restores the
  // input tree.
  LeafLabel token;
};

/// Unique branch point with l1 < n/2 and l2 <= n/2. Requires a doubly-rooted
/// tree with n >= 1; uniqueness is verified, not assumed.
int find_semi_centroid(const BinaryTree& t);

/// Centroid over all n+1 leaves of a rooted tree (STAR counts as a leaf),
/// tie broken toward the candidate farthest from STAR. Requires n >= 2.
int find_centroid(const BinaryTree& t);

/// Splits t at branch point b. Branch order: doubly-rooted puts the STAR
/// branch first, then BULLET, then the rest; rooted puts the two STAR-free
/// branches first ordered by original-leaf count (a fair coin from rng
/// breaks k1 == k2 ties) and the STAR branch last. Non-rooted inputs are
/// rejected (the algorithm never splits them).
SplitOutcome split_at(const BinaryTree& t, int b, RngStream& rng,
                      std::int64_t token_id = 0);

/// Splits at the semi-centroid (doubly-rooted) or centroid (rooted) and
/// verifies the size constraints of the outcome.
SplitOutcome split_tree(const BinaryTree& t, RngStream& rng,
                        std::int64_t token_id = 0);

/// Joins three trees by identifying the leaf labeled b[i] of each part; the
/// identified leaves become a single branch point (or vanish, if fewer than
/// three parts carry anything besides the b-leaf). Inverse of split_at when
/// applied to its three subtrees and token.
BinaryTree join_at_tokens(const std::array<const BinaryTree*, 3>& parts,
                          const std::array<LeafLabel, 3>& b);

/// Reassembles the split tree from its outcome.
BinaryTree rejoin(const SplitOutcome& outcome);

}  // namespace mast

#endif
