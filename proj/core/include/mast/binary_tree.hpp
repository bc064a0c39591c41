// Leaf-labeled binary trees: unrooted trees in which every vertex has degree
// 1 or 3, leaves carry distinct labels, and the rootedness kind is declared
// by which distinguished leaves (STAR, BULLET) are present. Degenerate trees
// (single vertex, single edge) are first-class values. Values are immutable
// for all practical purposes: the only mutators are attach_leaf and relabel,
// used while constructing a tree; all algorithms below return new trees.
#ifndef MAST_BINARY_TREE_HPP
#define MAST_BINARY_TREE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mast/leaf_label.hpp"

namespace mast {

enum class RootKind { NonRooted, Rooted, DoublyRooted };

const char* to_string(RootKind kind);
RootKind root_kind_from_string(const std::string& s);

class BinaryTree {
 public:
  /// Empty tree (no vertices). Only meaningful as a "nothing" witness.
  BinaryTree() = default;

  static BinaryTree single_leaf(const LeafLabel& label);
  static BinaryTree single_edge(const LeafLabel& a, const LeafLabel& b);

  /// Builds a tree from an explicit edge list. Vertices are 0..vertex_count-1;
  /// `leaves` maps the degree<=1 vertices to labels. Throws if the result is
  /// not a valid binary tree.
  static BinaryTree from_edges(
      int vertex_count, const std::vector<std::pair<int, int>>& edges,
      const std::vector<std::pair<int, LeafLabel>>& leaves);

  int vertex_count() const { return static_cast<int>(deg_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int i) const { return edges_[i]; }
  int degree(int v) const { return deg_[v]; }
  const std::array<std::int32_t, 3>& neighbors(int v) const { return adj_[v]; }
  bool is_leaf(int v) const { return deg_[v] <= 1; }
  bool is_branch_point(int v) const { return deg_[v] == 3; }

  /// Label of a leaf vertex, or nullptr for internal vertices.
  const LeafLabel* label_of(int v) const;
  /// Vertex carrying the label, or -1.
  int vertex_of(const LeafLabel& label) const;
  bool has_label(const LeafLabel& label) const { return vertex_of(label) >= 0; }

  int leaf_count() const { return static_cast<int>(vertex_label_.size()); }
  bool empty() const { return deg_.empty(); }

  /// Number of original (numbered) leaves; distinguished leaves don't count.
  long size() const { return original_count_; }

  /// Derived from which distinguished leaves are present.
  RootKind kind() const;

  /// All leaf labels in canonical (token) order.
  std::vector<LeafLabel> leaf_labels() const;
  /// Sorted indices of the original leaves.
  std::vector<std::int64_t> original_labels() const;

  bool same_leaf_set(const BinaryTree& other) const;

  /// Subdivides edge `edge_index` and hangs a new leaf off the midpoint.
  /// Returns the new leaf vertex. Edge enumeration is stable: the subdivided
  /// edge keeps its slot (near half) and the two new edges are appended.
  int attach_leaf(int edge_index, const LeafLabel& label);

  void relabel(const LeafLabel& from, const LeafLabel& to);

  /// Full invariant check (connected, acyclic, degrees, label multiplicity);
  /// throws std::logic_error with a description on the first violation.
  void check_valid() const;

 private:
  std::vector<std::array<std::int32_t, 3>> adj_;
  std::vector<std::int8_t> deg_;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges_;
  std::unordered_map<std::int32_t, LeafLabel> vertex_label_;
  std::unordered_map<LeafLabel, std::int32_t, LeafLabelHash> label_vertex_;
  long original_count_ = 0;

  int add_vertex();
  void add_edge(int u, int v);
  void set_label(int v, const LeafLabel& label);
};

/// Induced binary tree on a subset of the leaves (the subtree spanned by
/// them with degree-2 vertices suppressed). Labels are preserved. Throws if
/// `labels` is empty or mentions a label not present.
BinaryTree restrict_to(const BinaryTree& t, std::span<const LeafLabel> labels);
BinaryTree restrict_to(const BinaryTree& t, const std::vector<LeafLabel>& labels);

/// Tree with one leaf removed and the resulting degree-2 vertex suppressed.
/// Removing the only leaf yields the empty tree.
BinaryTree remove_leaf(const BinaryTree& t, const LeafLabel& label);

/// One bipartition of the leaf set per edge, in canonical form: each side
/// sorted, the lexicographically smaller side first, bipartitions sorted.
/// The set of non-trivial bipartitions determines the tree up to
/// label-preserving equivalence.
struct SplitSet {
  using Side = std::vector<LeafLabel>;
  std::vector<std::pair<Side, Side>> bipartitions;

  bool operator==(const SplitSet& o) const = default;
};

SplitSet split_set(const BinaryTree& t);

/// Label-preserving equivalence. Requires equal leaf sets (throws otherwise).
bool is_equivalent(const BinaryTree& t, const BinaryTree& u);

}  // namespace mast

#endif
