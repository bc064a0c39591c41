#include "mast/splitting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mast {

namespace {

// Path of vertices from `from` to `to` inclusive.
std::vector<int> path_between(const BinaryTree& t, int from, int to) {
  const int n = t.vertex_count();
  std::vector<int> parent(n, -1), stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

// Number of original leaves reachable from `start` without crossing
// `blocked`.
long originals_behind(const BinaryTree& t, int start, int blocked) {
  long count = 0;
  std::vector<int> stack{start};
  std::vector<char> seen(t.vertex_count(), 0);
  seen[start] = seen[blocked] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (const LeafLabel* l = t.label_of(v); l && l->is_original()) ++count;
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return count;
}

// Collects the branch hanging at `root` away from branch point `b` as a new
// tree, with a token leaf replacing b. Also returns the branch's original
// labels, sorted.
std::pair<BinaryTree, std::vector<std::int64_t>> extract_branch(
    const BinaryTree& t, int b, int root, const LeafLabel& token) {
  const int n = t.vertex_count();
  std::vector<int> new_id(n, -1), stack{root};
  std::vector<int> members;
  new_id[root] = 0;
  members.push_back(root);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (w == b || new_id[w] >= 0) continue;
      new_id[w] = static_cast<int>(members.size());
      members.push_back(w);
      stack.push_back(w);
    }
  }
  const int token_vertex = static_cast<int>(members.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(members.size());
  edges.emplace_back(new_id[root], token_vertex);
  for (int v : members)
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (w != b && new_id[v] < new_id[w]) edges.emplace_back(new_id[v], new_id[w]);
    }
  std::vector<std::pair<int, LeafLabel>> leaves;
  std::vector<std::int64_t> originals;
  for (int v : members)
    if (const LeafLabel* l = t.label_of(v)) {
      leaves.emplace_back(new_id[v], *l);
      if (l->is_original()) originals.push_back(l->index());
    }
  leaves.emplace_back(token_vertex, token);
  std::sort(originals.begin(), originals.end());
  return {BinaryTree::from_edges(token_vertex + 1, edges, leaves),
          std::move(originals)};
}

}  // namespace

int find_semi_centroid(const BinaryTree& t) {
  if (t.kind() != RootKind::DoublyRooted)
    throw std::invalid_argument("find_semi_centroid: tree is not doubly-rooted");
  const long n = t.size();
  if (n < 1)
    throw std::invalid_argument("find_semi_centroid: no branch point at n = 0");
  const int star = t.vertex_of(LeafLabel::star());
  const int bullet = t.vertex_of(LeafLabel::bullet());
  const std::vector<int> path = path_between(t, star, bullet);

  // Original-leaf count of the side branch at each interior path vertex.
  std::vector<long> side(path.size(), 0);
  long total = 0;
  for (std::size_t j = 1; j + 1 < path.size(); ++j) {
    int v = path[j];
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (w != path[j - 1] && w != path[j + 1]) {
        side[j] = originals_behind(t, w, v);
        break;
      }
    }
    total += side[j];
  }
  if (total != n)
    throw std::logic_error("find_semi_centroid: side branches lost leaves");

  int found = -1, satisfied = 0;
  long star_side = 0;
  for (std::size_t j = 1; j + 1 < path.size(); ++j) {
    const long l1 = star_side;
    const long l2 = n - star_side - side[j];
    if (2 * l1 < n && 2 * l2 <= n) {
      ++satisfied;
      found = path[j];
    }
    star_side += side[j];
  }
  if (satisfied != 1)
    throw std::logic_error("find_semi_centroid: expected a unique branch point, found " +
                           std::to_string(satisfied));
  return found;
}

int find_centroid(const BinaryTree& t) {
  if (t.kind() != RootKind::Rooted)
    throw std::invalid_argument("find_centroid: tree is not rooted");
  const long n = t.size();
  if (n < 2)
    throw std::invalid_argument("find_centroid: needs n >= 2");
  const long total_leaves = n + 1;  // STAR counts here
  const int star = t.vertex_of(LeafLabel::star());
  const int nv = t.vertex_count();

  // Root the tree at STAR; count leaves below each vertex and track depth.
  std::vector<int> parent(nv, -1), order;
  std::vector<long> depth(nv, 0), below(nv, 0);
  order.reserve(nv);
  std::vector<int> stack{star};
  parent[star] = star;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (parent[w] < 0) {
        parent[w] = v;
        depth[w] = depth[v] + 1;
        stack.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (t.is_leaf(v)) below[v] = 1;
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (w != v && parent[w] == v) below[v] += below[w];
    }
  }

  int best = -1;
  long best_depth = -1;
  int candidates = 0;
  for (int v = 0; v < nv; ++v) {
    if (!t.is_branch_point(v)) continue;
    long worst = total_leaves - below[v];  // the branch through the parent
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (parent[w] == v) worst = std::max(worst, below[w]);
    }
    if (2 * worst <= total_leaves) {
      ++candidates;
      if (depth[v] > best_depth) {
        best_depth = depth[v];
        best = v;
      }
    }
  }
  if (candidates < 1 || candidates > 2)
    throw std::logic_error("find_centroid: expected 1 or 2 candidates, found " +
                           std::to_string(candidates));
  return best;
}

SplitOutcome split_at(const BinaryTree& t, int b, RngStream& rng,
                      std::int64_t token_id) {
  if (b < 0 || b >= t.vertex_count() || !t.is_branch_point(b))
    throw std::invalid_argument("split_at: not a branch point");
  const RootKind kind = t.kind();
  if (kind == RootKind::NonRooted)
    throw std::invalid_argument("split_at: non-rooted trees are not split");

  const LeafLabel token = LeafLabel::split_token(token_id);
  std::array<std::pair<BinaryTree, std::vector<std::int64_t>>, 3> branches;
  for (int k = 0; k < 3; ++k)
    branches[k] = extract_branch(t, b, t.neighbors(b)[k], token);

  std::array<int, 3> order{0, 1, 2};
  if (kind == RootKind::DoublyRooted) {
    int star_at = -1, bullet_at = -1;
    for (int k = 0; k < 3; ++k) {
      if (branches[k].first.has_label(LeafLabel::star())) star_at = k;
      if (branches[k].first.has_label(LeafLabel::bullet())) bullet_at = k;
    }
    if (star_at < 0 || bullet_at < 0 || star_at == bullet_at)
      throw std::invalid_argument(
          "split_at: branch point must separate STAR and BULLET");
    order = {star_at, bullet_at, 3 - star_at - bullet_at};
  } else {
    int star_at = -1;
    for (int k = 0; k < 3; ++k)
      if (branches[k].first.has_label(LeafLabel::star())) star_at = k;
    int a = (star_at + 1) % 3, c = (star_at + 2) % 3;
    const long ka = branches[a].first.size(), kc = branches[c].first.size();
    if (ka > kc || (ka == kc && rng.next_bool())) std::swap(a, c);
    order = {a, c, star_at};
  }

  SplitOutcome out;
  out.branch_point = b;
  out.token = token;
  for (int k = 0; k < 3; ++k) {
    out.subtrees[k] = std::move(branches[order[k]].first);
    out.leaf_sets[k] = std::move(branches[order[k]].second);
    out.sizes[k] = static_cast<long>(out.leaf_sets[k].size());
  }
  return out;
}

BinaryTree join_at_tokens(const std::array<const BinaryTree*, 3>& w,
                          const std::array<LeafLabel, 3>& b) {
  struct Part {
    const BinaryTree* tree;
    LeafLabel blabel;
    int bvertex;
    int offset;
  };
  std::vector<Part> parts;
  for (int i = 0; i < 3; ++i) {
    int bv = w[i]->vertex_of(b[i]);
    if (bv < 0)
      throw std::invalid_argument("join_at_tokens: part lacks its b-leaf");
    if (w[i]->leaf_count() >= 2) parts.push_back({w[i], b[i], bv, 0});
  }
  if (parts.empty())
    throw std::invalid_argument("join_at_tokens: nothing to join");

  if (parts.size() == 1)
    return remove_leaf(*parts[0].tree, parts[0].blabel);

  // Concatenate the parts' vertices, dropping each b-leaf, then wire the
  // b-neighbors together: directly for two parts, through a new branch
  // point for three.
  int next = 0;
  for (Part& p : parts) {
    p.offset = next;
    next += p.tree->vertex_count() - 1;  // b-leaf dropped
  }
  const int center = (parts.size() == 3) ? next++ : -1;

  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, LeafLabel>> leaves;
  std::vector<int> anchors;
  for (const Part& p : parts) {
    const BinaryTree& pt = *p.tree;
    auto mapped = [&](int v) { return p.offset + (v > p.bvertex ? v - 1 : v); };
    for (int e = 0; e < pt.edge_count(); ++e) {
      auto [x, y] = pt.edge(e);
      if (x == p.bvertex || y == p.bvertex) {
        anchors.push_back(mapped(x == p.bvertex ? y : x));
        continue;
      }
      edges.emplace_back(mapped(x), mapped(y));
    }
    for (int v = 0; v < pt.vertex_count(); ++v)
      if (const LeafLabel* l = pt.label_of(v))
        if (v != p.bvertex) leaves.emplace_back(mapped(v), *l);
  }
  if (anchors.size() != parts.size())
    throw std::logic_error("join_at_tokens: b-leaf was not a leaf");
  if (parts.size() == 2) {
    edges.emplace_back(anchors[0], anchors[1]);
  } else {
    for (int a : anchors) edges.emplace_back(center, a);
  }
  return BinaryTree::from_edges(next, edges, leaves);
}

BinaryTree rejoin(const SplitOutcome& outcome) {
  return join_at_tokens(
      {&outcome.subtrees[0], &outcome.subtrees[1], &outcome.subtrees[2]},
      {outcome.token, outcome.token, outcome.token});
}

SplitOutcome split_tree(const BinaryTree& t, RngStream& rng,
                        std::int64_t token_id) {
  const RootKind kind = t.kind();
  if (kind == RootKind::DoublyRooted) {
    SplitOutcome out = split_at(t, find_semi_centroid(t), rng, token_id);
    const long n = t.size();
    if (!(2 * out.sizes[0] < n && 2 * out.sizes[1] <= n))
      throw std::logic_error("split_tree: semi-centroid size constraints violated");
    return out;
  }
  if (kind == RootKind::Rooted) {
    SplitOutcome out = split_at(t, find_centroid(t), rng, token_id);
    const long n = t.size();
    if (!(out.sizes[0] <= out.sizes[1] && 2 * out.sizes[1] < n + 1 &&
          2 * out.sizes[2] <= n - 1))
      throw std::logic_error("split_tree: centroid size constraints violated");
    return out;
  }
  throw std::invalid_argument("split_tree: non-rooted trees are not split");
}

}  // namespace mast
