// Uniform random leaf-labeled binary trees, built by attaching leaves one by
// one to a uniformly chosen existing edge. Insertion order is fixed (STAR,
// then BULLET, then L1..Ln), so a seed fully determines the tree.
#ifndef MAST_GENERATE_HPP
#define MAST_GENERATE_HPP

#include "mast/binary_tree.hpp"
#include "mast/rng.hpp"

namespace mast {

/// Uniform sample over all equivalence classes with the stated leaf set.
/// (0, NonRooted) is rejected; every other (n >= 0, kind) is valid.
BinaryTree generate_uniform(long n, RootKind kind, RngStream& rng);

}  // namespace mast

#endif
