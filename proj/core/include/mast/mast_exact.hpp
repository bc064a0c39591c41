// Exact computation of kappa, the size of the largest common subtree, by
// descending-size subset search. Deliberately brute force: the point of this
// module is obvious correctness, as ground truth for the recursive
// algorithm. Distinguished leaves are always included in the compared
// restrictions but never counted.
#ifndef MAST_MAST_EXACT_HPP
#define MAST_MAST_EXACT_HPP

#include <cstdint>
#include <vector>

#include "mast/binary_tree.hpp"

namespace mast {

struct MastResult {
  long kappa = 0;
  std::vector<std::int64_t> witness;  // original labels, sorted
};

/// Exact kappa for trees on the same leaf set and of the same kind.
/// Rejects n > limit. Among maximum witnesses, returns the
/// lexicographically smallest.
MastResult mast_exact(const BinaryTree& t, const BinaryTree& u,
                      long limit = 16);

/// Lemma-8 coupling check: kappa of a rooted pair never exceeds kappa of
/// the pair obtained by deleting STAR from both trees. Returns whether the
/// inequality holds (it always must).
bool kappa_lower_bound_check(const BinaryTree& t1, const BinaryTree& u1,
                             long limit = 16);

}  // namespace mast

#endif
