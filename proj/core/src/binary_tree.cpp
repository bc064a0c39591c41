#include "mast/binary_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mast/newick.hpp"

namespace mast {

const char* to_string(RootKind kind) {
  switch (kind) {
    case RootKind::NonRooted: return "nonrooted";
    case RootKind::Rooted: return "rooted";
    case RootKind::DoublyRooted: return "doubly";
  }
  return "?";
}

RootKind root_kind_from_string(const std::string& s) {
  if (s == "nonrooted") return RootKind::NonRooted;
  if (s == "rooted") return RootKind::Rooted;
  if (s == "doubly") return RootKind::DoublyRooted;
  throw std::invalid_argument("unknown root kind: '" + s + "'");
}

int BinaryTree::add_vertex() {
  adj_.push_back({-1, -1, -1});
  deg_.push_back(0);
  return static_cast<int>(deg_.size()) - 1;
}

void BinaryTree::add_edge(int u, int v) {
  adj_[u][deg_[u]++] = v;
  adj_[v][deg_[v]++] = u;
  edges_.emplace_back(u, v);
}

void BinaryTree::set_label(int v, const LeafLabel& label) {
  if (label_vertex_.count(label))
    throw std::invalid_argument("duplicate leaf label " + label.token());
  vertex_label_.emplace(v, label);
  label_vertex_.emplace(label, v);
  if (label.is_original()) ++original_count_;
}

BinaryTree BinaryTree::single_leaf(const LeafLabel& label) {
  BinaryTree t;
  int v = t.add_vertex();
  t.set_label(v, label);
  return t;
}

BinaryTree BinaryTree::single_edge(const LeafLabel& a, const LeafLabel& b) {
  BinaryTree t;
  int u = t.add_vertex();
  int v = t.add_vertex();
  t.add_edge(u, v);
  t.set_label(u, a);
  t.set_label(v, b);
  return t;
}

BinaryTree BinaryTree::from_edges(
    int vertex_count, const std::vector<std::pair<int, int>>& edges,
    const std::vector<std::pair<int, LeafLabel>>& leaves) {
  BinaryTree t;
  for (int i = 0; i < vertex_count; ++i) t.add_vertex();
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count || u == v)
      throw std::invalid_argument("bad edge endpoints");
    if (t.deg_[u] >= 3 || t.deg_[v] >= 3)
      throw std::invalid_argument("vertex degree exceeds 3");
    t.add_edge(u, v);
  }
  for (const auto& [v, label] : leaves) t.set_label(v, label);
  t.check_valid();
  return t;
}

const LeafLabel* BinaryTree::label_of(int v) const {
  auto it = vertex_label_.find(v);
  return it == vertex_label_.end() ? nullptr : &it->second;
}

int BinaryTree::vertex_of(const LeafLabel& label) const {
  auto it = label_vertex_.find(label);
  return it == label_vertex_.end() ? -1 : it->second;
}

RootKind BinaryTree::kind() const {
  const bool star = has_label(LeafLabel::star());
  const bool bullet = has_label(LeafLabel::bullet());
  if (star && bullet) return RootKind::DoublyRooted;
  if (star) return RootKind::Rooted;
  if (bullet)
    throw std::logic_error("tree has BULLET without STAR");
  return RootKind::NonRooted;
}

std::vector<LeafLabel> BinaryTree::leaf_labels() const {
  std::vector<LeafLabel> out;
  out.reserve(vertex_label_.size());
  for (const auto& [v, label] : vertex_label_) out.push_back(label);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> BinaryTree::original_labels() const {
  std::vector<std::int64_t> out;
  for (const auto& [v, label] : vertex_label_)
    if (label.is_original()) out.push_back(label.index());
  std::sort(out.begin(), out.end());
  return out;
}

bool BinaryTree::same_leaf_set(const BinaryTree& other) const {
  if (vertex_label_.size() != other.vertex_label_.size()) return false;
  for (const auto& [v, label] : vertex_label_)
    if (!other.has_label(label)) return false;
  return true;
}

int BinaryTree::attach_leaf(int edge_index, const LeafLabel& label) {
  if (edge_index < 0 || edge_index >= edge_count())
    throw std::invalid_argument("attach_leaf: edge index out of range");
  auto [u, v] = edges_[edge_index];
  int m = add_vertex();
  int w = add_vertex();
  auto replace = [&](int at, int from, int to) {
    for (int k = 0; k < deg_[at]; ++k)
      if (adj_[at][k] == from) { adj_[at][k] = to; return; }
    throw std::logic_error("attach_leaf: adjacency out of sync");
  };
  replace(u, v, m);
  replace(v, u, m);
  adj_[m] = {u, v, w};
  deg_[m] = 3;
  adj_[w] = {m, -1, -1};
  deg_[w] = 1;
  edges_[edge_index] = {u, m};
  edges_.emplace_back(m, v);
  edges_.emplace_back(m, w);
  set_label(w, label);
  return w;
}

void BinaryTree::relabel(const LeafLabel& from, const LeafLabel& to) {
  int v = vertex_of(from);
  if (v < 0)
    throw std::invalid_argument("relabel: no leaf " + from.token());
  if (from == to) return;
  if (has_label(to))
    throw std::invalid_argument("relabel: label " + to.token() + " in use");
  label_vertex_.erase(from);
  label_vertex_.emplace(to, v);
  vertex_label_[v] = to;
  if (from.is_original()) --original_count_;
  if (to.is_original()) ++original_count_;
}

void BinaryTree::check_valid() const {
  const int n = vertex_count();
  if (n == 0) {
    if (!vertex_label_.empty() || !edges_.empty())
      throw std::logic_error("empty tree with labels or edges");
    return;
  }
  if (static_cast<int>(edges_.size()) != n - 1)
    throw std::logic_error("edge count != vertex count - 1");
  // Connectivity (acyclicity follows from the edge count).
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int k = 0; k < deg_[v]; ++k) {
      int w = adj_[v][k];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw std::logic_error("tree is disconnected");
  int stars = 0, bullets = 0;
  for (int v = 0; v < n; ++v) {
    const int expected_leafness = (n == 1) ? 0 : 1;
    if (deg_[v] != 3 && deg_[v] != expected_leafness)
      throw std::logic_error("vertex of degree " + std::to_string(deg_[v]));
    const LeafLabel* label = label_of(v);
    if (is_leaf(v) != (label != nullptr))
      throw std::logic_error("leaf/label mismatch at vertex " +
                             std::to_string(v));
    if (label) {
      if (label->kind() == LeafLabel::Kind::Star) ++stars;
      if (label->kind() == LeafLabel::Kind::Bullet) ++bullets;
    }
  }
  if (stars > 1 || bullets > 1)
    throw std::logic_error("more than one distinguished leaf of a kind");
}

BinaryTree restrict_to(const BinaryTree& t, const std::vector<LeafLabel>& labels) {
  return restrict_to(t, std::span<const LeafLabel>(labels));
}

BinaryTree restrict_to(const BinaryTree& t, std::span<const LeafLabel> labels) {
  if (labels.empty())
    throw std::invalid_argument("restrict_to: empty leaf set");
  const int n = t.vertex_count();
  std::vector<char> keep_leaf(n, 0);
  for (const LeafLabel& label : labels) {
    int v = t.vertex_of(label);
    if (v < 0)
      throw std::invalid_argument("restrict_to: label " + label.token() +
                                  " not in tree");
    keep_leaf[v] = 1;
  }
  if (labels.size() == 1) return BinaryTree::single_leaf(labels[0]);

  // Prune to the subtree spanned by the kept leaves.
  std::vector<std::int8_t> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<std::int8_t>(t.degree(v));
  std::vector<char> removed(n, 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1 && !keep_leaf[v]) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    removed[v] = 1;
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (removed[w]) continue;
      if (--deg[w] == 1 && !keep_leaf[w]) queue.push_back(w);
    }
  }

  // Significant vertices (kept leaves and branch points of the pruned tree)
  // become the new vertices; degree-2 chains between them become edges.
  std::vector<int> new_id(n, -1);
  int next_id = 0;
  std::vector<std::pair<int, LeafLabel>> leaves;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    if (keep_leaf[v] || deg[v] == 3) {
      new_id[v] = next_id++;
      if (keep_leaf[v]) leaves.emplace_back(new_id[v], *t.label_of(v));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    if (new_id[v] < 0 || removed[v]) continue;
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (removed[w]) continue;
      // Walk the chain starting v -> w until the next significant vertex.
      int prev = v, cur = w;
      while (new_id[cur] < 0) {
        int next = -1;
        for (int j = 0; j < t.degree(cur); ++j) {
          int x = t.neighbors(cur)[j];
          if (x != prev && !removed[x]) { next = x; break; }
        }
        prev = cur;
        cur = next;
      }
      if (new_id[v] < new_id[cur]) edges.emplace_back(new_id[v], new_id[cur]);
    }
  }
  return BinaryTree::from_edges(next_id, edges, leaves);
}

BinaryTree remove_leaf(const BinaryTree& t, const LeafLabel& label) {
  int v = t.vertex_of(label);
  if (v < 0)
    throw std::invalid_argument("remove_leaf: no leaf " + label.token());
  if (t.leaf_count() == 1) return BinaryTree();
  std::vector<LeafLabel> rest;
  rest.reserve(t.leaf_count() - 1);
  for (const LeafLabel& l : t.leaf_labels())
    if (l != label) rest.push_back(l);
  return restrict_to(t, rest);
}

SplitSet split_set(const BinaryTree& t) {
  SplitSet out;
  const int n = t.vertex_count();
  if (n == 0 || t.edge_count() == 0) return out;

  // Orient every edge away from vertex 0 and collect the leaf labels below
  // it; the bipartition is (below, rest).
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<int> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<LeafLabel>> below(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<LeafLabel> acc;
    if (const LeafLabel* l = t.label_of(v)) acc.push_back(*l);
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (w == v || parent[w] != v) continue;
      std::vector<LeafLabel> merged;
      merged.reserve(acc.size() + below[w].size());
      std::merge(acc.begin(), acc.end(), below[w].begin(), below[w].end(),
                 std::back_inserter(merged));
      acc = std::move(merged);
    }
    below[v] = std::move(acc);
  }
  const std::vector<LeafLabel> all = t.leaf_labels();
  for (int i = 0; i < t.edge_count(); ++i) {
    auto [u, v] = t.edge(i);
    int child = (parent[v] == u) ? v : u;
    const std::vector<LeafLabel>& side = below[child];
    std::vector<LeafLabel> other;
    other.reserve(all.size() - side.size());
    std::set_difference(all.begin(), all.end(), side.begin(), side.end(),
                        std::back_inserter(other));
    if (side <= other)
      out.bipartitions.emplace_back(side, std::move(other));
    else
      out.bipartitions.emplace_back(std::move(other), side);
  }
  std::sort(out.bipartitions.begin(), out.bipartitions.end());
  return out;
}

bool is_equivalent(const BinaryTree& t, const BinaryTree& u) {
  if (!t.same_leaf_set(u))
    throw std::invalid_argument("is_equivalent: leaf sets differ");
  if (t.empty()) return true;
  // Canonical serialization equality; coincides with split-set equality.
  return to_newick(t) == to_newick(u);
}

}  // namespace mast
