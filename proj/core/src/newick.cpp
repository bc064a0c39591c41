#include "mast/newick.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace mast {

namespace {

// Minimal label in the subtree hanging at v away from parent, for every
// vertex of the tree rooted at `root` (a leaf). Computed iteratively; trees
// can be caterpillars, so no recursion anywhere in this file.
struct Orientation {
  std::vector<int> parent;
  std::vector<int> order;  // preorder
  std::vector<LeafLabel> min_below;
};

Orientation orient(const BinaryTree& t, int root) {
  const int n = t.vertex_count();
  Orientation o;
  o.parent.assign(n, -1);
  o.order.reserve(n);
  o.min_below.assign(n, LeafLabel::star());
  std::vector<int> stack{root};
  o.parent[root] = root;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    o.order.push_back(v);
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (o.parent[w] < 0) {
        o.parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  for (auto it = o.order.rbegin(); it != o.order.rend(); ++it) {
    int v = *it;
    const LeafLabel* l = t.label_of(v);
    LeafLabel best;
    bool have = false;
    if (l) { best = *l; have = true; }
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (w != v && o.parent[w] == v) {
        if (!have || o.min_below[w] < best) { best = o.min_below[w]; have = true; }
      }
    }
    o.min_below[v] = best;
  }
  return o;
}

}  // namespace

std::string to_newick(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("to_newick: empty tree");
  if (t.vertex_count() == 1)
    return t.label_of(0)->token() + ";";

  const std::vector<LeafLabel> labels = t.leaf_labels();
  const int root = t.vertex_of(labels.front());
  Orientation o = orient(t, root);

  std::string out;
  out.reserve(static_cast<std::size_t>(t.vertex_count()) * 4);
  // Work items: a vertex to render, or a literal character.
  struct Item { int vertex; char literal; };
  std::vector<Item> stack;
  auto push_vertex = [&](int v) { stack.push_back({v, 0}); };
  auto push_char = [&](char c) { stack.push_back({-1, c}); };

  const int top = t.neighbors(root)[0];
  push_char(';');
  push_char(')');
  push_vertex(top);
  push_char(',');
  push_vertex(root);
  push_char('(');

  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (item.vertex < 0) {
      out.push_back(item.literal);
      continue;
    }
    int v = item.vertex;
    if (const LeafLabel* l = t.label_of(v)) {
      out += l->token();
      continue;
    }
    int c1 = -1, c2 = -1;
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (w == o.parent[v]) continue;
      (c1 < 0 ? c1 : c2) = w;
    }
    if (o.min_below[c2] < o.min_below[c1]) std::swap(c1, c2);
    push_char(')');
    push_vertex(c2);
    push_char(',');
    push_vertex(c1);
    push_char('(');
  }
  return out;
}

namespace {

struct ParseNode {
  LeafLabel label;          // valid when leaf
  bool leaf = false;
  std::vector<int> children;
};

}  // namespace

BinaryTree from_newick(const std::string& text) {
  // Tokenize and build the nesting structure with an explicit stack.
  std::vector<ParseNode> nodes;
  std::vector<int> frames;  // open '(' groups, as node indices
  int root = -1;
  bool terminated = false;

  auto add_child = [&](int node) {
    if (terminated)
      throw std::invalid_argument("from_newick: content after ';'");
    if (frames.empty()) {
      if (root >= 0)
        throw std::invalid_argument("from_newick: multiple top-level items");
      root = node;
    } else {
      nodes[frames.back()].children.push_back(node);
    }
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '(') {
      nodes.push_back({});
      frames.push_back(static_cast<int>(nodes.size()) - 1);
      ++i;
    } else if (c == ')') {
      if (frames.empty())
        throw std::invalid_argument("from_newick: unbalanced ')'");
      int done = frames.back();
      frames.pop_back();
      if (nodes[done].children.size() < 2)
        throw std::invalid_argument("from_newick: group with < 2 children");
      add_child(done);
      ++i;
    } else if (c == ',') {
      if (frames.empty())
        throw std::invalid_argument("from_newick: ',' outside a group");
      ++i;
    } else if (c == ';') {
      if (!frames.empty())
        throw std::invalid_argument("from_newick: ';' inside a group");
      if (root < 0)
        throw std::invalid_argument("from_newick: empty input");
      terminated = true;
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[j])))
        ++j;
      ParseNode leaf;
      leaf.leaf = true;
      leaf.label = LeafLabel::from_token(text.substr(i, j - i));
      nodes.push_back(leaf);
      add_child(static_cast<int>(nodes.size()) - 1);
      i = j;
    } else {
      throw std::invalid_argument(std::string("from_newick: bad character '") +
                                  c + "'");
    }
  }
  if (!terminated)
    throw std::invalid_argument("from_newick: missing ';'");

  const ParseNode& r = nodes[root];
  if (r.leaf) return BinaryTree::single_leaf(r.label);
  if (r.children.size() != 2 && r.children.size() != 3)
    throw std::invalid_argument(
        "from_newick: root must be a leaf or have 2 or 3 children");

  // Assign tree vertices: every parse node except a binary root (which is
  // the virtual root subdividing an edge) becomes one vertex.
  const bool virtual_root = r.children.size() == 2;
  std::vector<int> vertex_of_node(nodes.size(), -1);
  int next = 0;
  std::vector<std::pair<int, LeafLabel>> leaves;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> todo{root};
  while (!todo.empty()) {
    int id = todo.back();
    todo.pop_back();
    const ParseNode& node = nodes[id];
    const bool skip = (id == root && virtual_root);
    if (!skip) {
      vertex_of_node[id] = next++;
      if (node.leaf) leaves.emplace_back(vertex_of_node[id], node.label);
    }
    if (!node.leaf) {
      if (id != root && node.children.size() != 2)
        throw std::invalid_argument(
            "from_newick: internal group must have exactly 2 children");
      for (int ch : node.children) todo.push_back(ch);
    }
  }
  // Second pass for edges now that all vertices are numbered.
  todo.assign(1, root);
  while (!todo.empty()) {
    int id = todo.back();
    todo.pop_back();
    const ParseNode& node = nodes[id];
    if (node.leaf) continue;
    if (id == root && virtual_root) {
      edges.emplace_back(vertex_of_node[node.children[0]],
                         vertex_of_node[node.children[1]]);
    } else {
      for (int ch : node.children)
        edges.emplace_back(vertex_of_node[id], vertex_of_node[ch]);
    }
    for (int ch : node.children) todo.push_back(ch);
  }
  return BinaryTree::from_edges(next, edges, leaves);
}

}  // namespace mast
