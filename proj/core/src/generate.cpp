#include "mast/generate.hpp"

#include <stdexcept>
#include <vector>

namespace mast {

BinaryTree generate_uniform(long n, RootKind kind, RngStream& rng) {
  if (n < 0) throw std::invalid_argument("generate_uniform: n must be >= 0");
  if (n == 0 && kind == RootKind::NonRooted)
    throw std::invalid_argument("generate_uniform: no non-rooted tree on 0 leaves");

  std::vector<LeafLabel> labels;
  if (kind != RootKind::NonRooted) labels.push_back(LeafLabel::star());
  if (kind == RootKind::DoublyRooted) labels.push_back(LeafLabel::bullet());
  for (long k = 1; k <= n; ++k) labels.push_back(LeafLabel::original(k));

  if (labels.size() == 1) return BinaryTree::single_leaf(labels[0]);
  BinaryTree t = BinaryTree::single_edge(labels[0], labels[1]);
  for (std::size_t k = 2; k < labels.size(); ++k) {
    const int e = static_cast<int>(rng.next_below(t.edge_count()));
    t.attach_leaf(e, labels[k]);
  }
  return t;
}

}  // namespace mast
