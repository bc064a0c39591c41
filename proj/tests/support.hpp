// Shared test utilities: exhaustive tree enumeration (the independent oracle
// for uniformity and split checks), chi-square p-values, and the finite-n
// pmf moments used as the oracle for the Dirichlet quadrature.
#ifndef MAST_TESTS_SUPPORT_HPP
#define MAST_TESTS_SUPPORT_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "mast/binary_tree.hpp"
#include "mast/newick.hpp"
#include "mast/split_pmf.hpp"

namespace mast_tests {

// Visits every equivalence class on the given labels exactly once, by the
// bijection between trees on k leaves and (tree on k-1 leaves, edge).
inline void enumerate_trees(const std::vector<mast::LeafLabel>& labels,
                            const std::function<void(const mast::BinaryTree&)>& visit) {
  if (labels.empty()) return;
  if (labels.size() == 1) {
    visit(mast::BinaryTree::single_leaf(labels[0]));
    return;
  }
  std::function<void(mast::BinaryTree&, std::size_t)> grow =
      [&](mast::BinaryTree& t, std::size_t next) {
        if (next == labels.size()) {
          visit(t);
          return;
        }
        const int edges = t.edge_count();
        for (int e = 0; e < edges; ++e) {
          mast::BinaryTree bigger = t;
          bigger.attach_leaf(e, labels[next]);
          grow(bigger, next + 1);
        }
      };
  mast::BinaryTree base = mast::BinaryTree::single_edge(labels[0], labels[1]);
  grow(base, 2);
}

inline std::vector<mast::BinaryTree> all_trees(
    const std::vector<mast::LeafLabel>& labels) {
  std::vector<mast::BinaryTree> out;
  enumerate_trees(labels, [&](const mast::BinaryTree& t) { out.push_back(t); });
  return out;
}

inline std::vector<mast::LeafLabel> original_labels(long n) {
  std::vector<mast::LeafLabel> out;
  for (long k = 1; k <= n; ++k) out.push_back(mast::LeafLabel::original(k));
  return out;
}

inline std::vector<mast::LeafLabel> rooted_labels(long n) {
  std::vector<mast::LeafLabel> out{mast::LeafLabel::star()};
  for (long k = 1; k <= n; ++k) out.push_back(mast::LeafLabel::original(k));
  return out;
}

inline std::vector<mast::LeafLabel> doubly_labels(long n) {
  std::vector<mast::LeafLabel> out{mast::LeafLabel::star(),
                                   mast::LeafLabel::bullet()};
  for (long k = 1; k <= n; ++k) out.push_back(mast::LeafLabel::original(k));
  return out;
}

// p-value of the chi-square statistic for observed vs expected counts.
inline double chi_square_p(const std::vector<double>& observed,
                           const std::vector<double>& expected) {
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i)
    stat += (observed[i] - expected[i]) * (observed[i] - expected[i]) /
            expected[i];
  boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

inline double chi_square_uniform_p(const std::vector<long>& counts) {
  double total = 0.0;
  for (long c : counts) total += static_cast<double>(c);
  std::vector<double> obs, exp;
  for (long c : counts) {
    obs.push_back(static_cast<double>(c));
    exp.push_back(total / static_cast<double>(counts.size()));
  }
  return chi_square_p(obs, exp);
}

// Exact finite-n expectations E[(l_i/n)^beta], i = 0,1,2, from a split-size
// pmf; the independent oracle for the Dirichlet moments (Lemmas: the
// discrete laws converge to the continuum ones). Kahan-summed.
inline std::array<double, 3> pmf_moments(
    const std::vector<mast::SplitPmfEntry>& pmf, long n, double beta) {
  std::array<double, 3> sum{0, 0, 0}, comp{0, 0, 0};
  for (const mast::SplitPmfEntry& e : pmf)
    for (int i = 0; i < 3; ++i) {
      const double term =
          e.probability * std::pow(static_cast<double>(e.sizes[i]) /
                                       static_cast<double>(n),
                                   beta);
      const double y = term - comp[i], t = sum[i] + y;
      comp[i] = (t - sum[i]) - y;
      sum[i] = t;
    }
  return sum;
}

inline std::array<double, 3> pmf_moments_doubly(long n, double beta) {
  return pmf_moments(mast::split_pmf_doubly(n), n, beta);
}

inline std::array<double, 3> pmf_moments_rooted(long n, double beta) {
  return pmf_moments(mast::split_pmf_rooted(n), n, beta);
}

inline std::string canon(const mast::BinaryTree& t) { return mast::to_newick(t); }

}  // namespace mast_tests

#endif
