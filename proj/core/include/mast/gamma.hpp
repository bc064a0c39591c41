// The recursive common-subtree construction: split both trees at their
// (semi-)centroids, keep the leaves that land in matching branches, recurse
// on the three induced pairs, and join the results by re-identifying the
// three copies of the branch point. The output is a common subtree
// containing the distinguished leaves; its size gamma is the sum of the
// three recursive sizes at every internal node.
#ifndef MAST_GAMMA_HPP
#define MAST_GAMMA_HPP

#include <cstdint>
#include <vector>

#include "mast/binary_tree.hpp"
#include "mast/rng.hpp"

namespace mast {

struct GammaResult {
  long size = 0;                            // original leaves only
  std::vector<std::int64_t> leafset;        // sorted original labels kept
  BinaryTree witness;                       // includes distinguished leaves
};

struct GammaStats {
  long nodes = 0;       // recursion nodes entered
  long tie_draws = 0;   // fair coins consumed by rooted splits
  int max_depth = 0;
};

/// Runs the algorithm on two trees over the same leaf set, both Rooted or
/// both DoublyRooted. Deterministic given the rng seed: tie coins are drawn
/// at each node (first tree, then second) and each recursive branch runs on
/// a stream forked from the node's stream by branch index.
GammaResult gamma(const BinaryTree& t, const BinaryTree& u, RngStream& rng,
                  GammaStats* stats = nullptr);

/// Non-rooted pairs, n >= 1: attach STAR to a uniformly chosen edge of each
/// tree (the reverse of the coupling that deletes it), run the rooted
/// algorithm, and strip STAR from the witness.
GammaResult gamma_nonrooted(const BinaryTree& t, const BinaryTree& u,
                            RngStream& rng, GammaStats* stats = nullptr);

}  // namespace mast

#endif
