#include "mast/mast_exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace mast {

namespace {

// A restriction's splits are the splits of the full tree intersected with
// the kept leaf set, so the whole subset search runs on precomputed edge
// bitmasks and never rebuilds a tree. Bit i stands for the i-th smallest
// original label; the distinguished leaves get the top bits.
constexpr int kStarBit = 60;
constexpr int kBulletBit = 61;

using Mask = std::uint64_t;

std::vector<Mask> edge_masks(const BinaryTree& t,
                             const std::vector<std::int64_t>& originals) {
  const int nv = t.vertex_count();
  std::vector<Mask> below(nv, 0);
  std::vector<int> parent(nv, -1), order;
  order.reserve(nv);
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
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (const LeafLabel* l = t.label_of(v)) {
      switch (l->kind()) {
        case LeafLabel::Kind::Original: {
          auto pos = std::lower_bound(originals.begin(), originals.end(),
                                      l->index());
          below[v] |= Mask{1} << (pos - originals.begin());
          break;
        }
        case LeafLabel::Kind::Star:
          below[v] |= Mask{1} << kStarBit;
          break;
        case LeafLabel::Kind::Bullet:
          below[v] |= Mask{1} << kBulletBit;
          break;
        default:
          throw std::invalid_argument("mast_exact: split tokens not supported");
      }
    }
    for (int k = 0; k < t.degree(v); ++k) {
      int w = t.neighbors(v)[k];
      if (w != v && parent[w] == v) below[v] |= below[w];
    }
  }
  std::vector<Mask> masks;
  masks.reserve(t.edge_count());
  for (int i = 0; i < t.edge_count(); ++i) {
    auto [u, v] = t.edge(i);
    masks.push_back(parent[v] == u ? below[v] : below[u]);
  }
  return masks;
}

// Canonical set of non-trivial splits of the restriction to `kept`.
void fingerprint(const std::vector<Mask>& masks, Mask kept,
                 std::vector<Mask>* out) {
  out->clear();
  const int total = std::popcount(kept);
  for (Mask m : masks) {
    const Mask x = m & kept;
    const int c = std::popcount(x);
    if (c < 2 || total - c < 2) continue;
    out->push_back(std::min(x, kept ^ x));
  }
  std::sort(out->begin(), out->end());
  out->erase(std::unique(out->begin(), out->end()), out->end());
}

}  // namespace

MastResult mast_exact(const BinaryTree& t, const BinaryTree& u, long limit) {
  if (!t.same_leaf_set(u))
    throw std::invalid_argument("mast_exact: leaf sets differ");
  if (t.kind() != u.kind())
    throw std::invalid_argument("mast_exact: root kinds differ");
  const std::vector<std::int64_t> originals = t.original_labels();
  const long n = static_cast<long>(originals.size());
  if (n > limit)
    throw std::invalid_argument("mast_exact: size exceeds limit");
  if (limit > 50)
    throw std::invalid_argument("mast_exact: limit too large for subset search");

  Mask dist = 0;
  if (t.has_label(LeafLabel::star())) dist |= Mask{1} << kStarBit;
  if (t.has_label(LeafLabel::bullet())) dist |= Mask{1} << kBulletBit;

  const std::vector<Mask> mt = edge_masks(t, originals);
  const std::vector<Mask> mu = edge_masks(u, originals);
  std::vector<Mask> ft, fu;

  auto matches = [&](Mask subset) {
    fingerprint(mt, subset | dist, &ft);
    fingerprint(mu, subset | dist, &fu);
    return ft == fu;
  };

  for (long s = n; s >= 0; --s) {
    // Combinations of {0..n-1} of size s in lexicographic order, so the
    // first feasible subset is the lexicographically smallest witness.
    std::vector<int> comb(s);
    for (long i = 0; i < s; ++i) comb[i] = static_cast<int>(i);
    for (;;) {
      Mask subset = 0;
      for (int i : comb) subset |= Mask{1} << i;
      if (matches(subset)) {
        MastResult res;
        res.kappa = s;
        for (int i : comb) res.witness.push_back(originals[i]);
        return res;
      }
      long j = s - 1;
      while (j >= 0 && comb[j] == n - s + j) --j;
      if (j < 0) break;
      ++comb[j];
      for (long i = j + 1; i < s; ++i) comb[i] = comb[i - 1] + 1;
    }
  }
  return MastResult{};  // s = 0 always matches, so this is unreachable
}

bool kappa_lower_bound_check(const BinaryTree& t1, const BinaryTree& u1,
                             long limit) {
  if (t1.kind() != RootKind::Rooted || u1.kind() != RootKind::Rooted)
    throw std::invalid_argument("kappa_lower_bound_check: trees must be rooted");
  const long k1 = mast_exact(t1, u1, limit).kappa;
  if (t1.size() == 0) return 0 >= k1;
  const BinaryTree t0 = remove_leaf(t1, LeafLabel::star());
  const BinaryTree u0 = remove_leaf(u1, LeafLabel::star());
  const long k0 = mast_exact(t0, u0, limit).kappa;
  return k0 >= k1;
}

}  // namespace mast
