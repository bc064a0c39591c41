#include "mast/gamma.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "mast/splitting.hpp"

namespace mast {

namespace {

std::vector<std::int64_t> intersect_sorted(const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

GammaResult gamma_impl(const BinaryTree& t, const BinaryTree& u,
                       RngStream rng, int depth, GammaStats* stats) {
  if (stats) {
    ++stats->nodes;
    stats->max_depth = std::max(stats->max_depth, depth);
  }
  const RootKind kind = t.kind();
  const long n = t.size();
  const LeafLabel star = LeafLabel::star();
  const LeafLabel bullet = LeafLabel::bullet();

  // Base cases: at n = 0 (and n = 1 rooted, where no branch point exists)
  // both trees are the unique shape on their leaf set; output it whole.
  if (n == 0 || (n == 1 && kind == RootKind::Rooted)) {
    GammaResult res;
    res.size = n;
    res.leafset = t.original_labels();
    res.witness = t;
    return res;
  }

  // Split both trees; the first tree's tie coin (if any) is drawn first.
  SplitOutcome st = split_tree(t, rng);
  SplitOutcome su = split_tree(u, rng);
  if (stats && kind == RootKind::Rooted) {
    if (st.sizes[0] == st.sizes[1]) ++stats->tie_draws;
    if (su.sizes[0] == su.sizes[1]) ++stats->tie_draws;
  }

  // For branch i, the subtree pair is induced on the common original leaves
  // plus the distinguished leaves of that branch; the split token is then
  // recast as STAR or BULLET for the recursive call.
  //   doubly-rooted: branches 1,2 recurse doubly-rooted, branch 3 rooted;
  //   rooted:        branches 1,2 recurse rooted, branch 3 doubly-rooted.
  std::array<GammaResult, 3> sub;
  std::array<LeafLabel, 3> brole{};
  for (int i = 0; i < 3; ++i) {
    std::vector<std::int64_t> common =
        intersect_sorted(st.leaf_sets[i], su.leaf_sets[i]);
    std::vector<LeafLabel> keep;
    keep.reserve(common.size() + 2);
    for (std::int64_t k : common) keep.push_back(LeafLabel::original(k));

    LeafLabel token_role;  // what the token becomes in the recursive call
    if (kind == RootKind::DoublyRooted) {
      if (i == 0) { keep.push_back(star); token_role = bullet; }
      if (i == 1) { keep.push_back(bullet); token_role = star; }
      if (i == 2) { token_role = star; }
    } else {
      if (i < 2) { token_role = star; }
      else { keep.push_back(star); token_role = bullet; }
    }
    keep.push_back(st.token);

    BinaryTree rt = restrict_to(st.subtrees[i], keep);
    BinaryTree ru = restrict_to(su.subtrees[i], keep);
    rt.relabel(st.token, token_role);
    ru.relabel(su.token, token_role);
    sub[i] = gamma_impl(rt, ru, rng.fork(i), depth + 1, stats);
    brole[i] = token_role;
  }

  GammaResult res;
  res.witness = join_at_tokens(
      {&sub[0].witness, &sub[1].witness, &sub[2].witness}, brole);
  for (int i = 0; i < 3; ++i) {
    res.size += sub[i].size;
    res.leafset.insert(res.leafset.end(), sub[i].leafset.begin(),
                       sub[i].leafset.end());
  }
  std::sort(res.leafset.begin(), res.leafset.end());
  // The decomposition identity: the output size is the sum of the three
  // recursive sizes, i.e. the kept leaf sets are disjoint and all survive
  // the join.
  if (static_cast<long>(res.leafset.size()) != res.size ||
      res.witness.size() != res.size)
    throw std::logic_error("gamma: decomposition identity violated");
  return res;
}

}  // namespace

GammaResult gamma(const BinaryTree& t, const BinaryTree& u, RngStream& rng,
                  GammaStats* stats) {
  const RootKind kind = t.kind();
  if (kind == RootKind::NonRooted)
    throw std::invalid_argument("gamma: use gamma_nonrooted for non-rooted pairs");
  if (u.kind() != kind)
    throw std::invalid_argument("gamma: root kinds differ");
  if (!t.same_leaf_set(u))
    throw std::invalid_argument("gamma: leaf sets differ");
  // Advance the caller's stream so repeated calls see fresh randomness, and
  // give the recursion its own root stream.
  return gamma_impl(t, u, RngStream(rng.next_u64()), 0, stats);
}

GammaResult gamma_nonrooted(const BinaryTree& t, const BinaryTree& u,
                            RngStream& rng, GammaStats* stats) {
  if (t.kind() != RootKind::NonRooted || u.kind() != RootKind::NonRooted)
    throw std::invalid_argument("gamma_nonrooted: trees must be non-rooted");
  if (!t.same_leaf_set(u))
    throw std::invalid_argument("gamma_nonrooted: leaf sets differ");
  if (t.size() < 1)
    throw std::invalid_argument("gamma_nonrooted: n must be >= 1");

  // Attach STAR to a uniform random edge of each tree; for uniform inputs
  // the resulting pair is distributed as a uniform rooted pair.
  auto attach_star = [&](const BinaryTree& base) {
    BinaryTree rooted = base;
    if (rooted.edge_count() == 0) {
      return BinaryTree::single_edge(*base.label_of(0), LeafLabel::star());
    }
    const int e = static_cast<int>(rng.next_below(rooted.edge_count()));
    rooted.attach_leaf(e, LeafLabel::star());
    return rooted;
  };
  BinaryTree t1 = attach_star(t);
  BinaryTree u1 = attach_star(u);

  GammaResult rooted = gamma(t1, u1, rng, stats);
  GammaResult res;
  res.size = rooted.size;
  res.leafset = std::move(rooted.leafset);
  res.witness = rooted.witness.leaf_count() <= 1
                    ? BinaryTree()
                    : remove_leaf(rooted.witness, LeafLabel::star());
  return res;
}

}  // namespace mast
