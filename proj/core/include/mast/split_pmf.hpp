// Exact distributions of the three branch sizes when splitting a uniform
// tree at the semi-centroid (doubly-rooted) or centroid (rooted):
//
//   doubly:  P(l1,l2,l3) = multinom(n; l)   c_{l1+2} c_{l2+2} c_{l3+1} / c_{n+2}
//            over l1 + l2 + l3 = n, l1 < n/2, l2 <= n/2;
//   rooted:  P(k1,k2,k3) = d multinom(n; k) c_{k1+1} c_{k2+1} c_{k3+2} / c_{n+1}
//            over k1 <= k2 < (n+1)/2, k3 <= (n-1)/2, with d = 1 when
//            k1 < k2 and d = 1/2 when k1 = k2.
//
// Probabilities are computed as exact rationals up to kExactPmfLimit and in
// log-gamma space above it.
#ifndef MAST_SPLIT_PMF_HPP
#define MAST_SPLIT_PMF_HPP

#include <array>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mast {

using BigRational = boost::multiprecision::cpp_rational;

inline constexpr long kExactPmfLimit = 300;

struct SplitPmfEntry {
  std::array<long, 3> sizes;
  double probability;
};

struct ExactSplitPmfEntry {
  std::array<long, 3> sizes;
  BigRational probability;
};

std::vector<SplitPmfEntry> split_pmf_doubly(long n);   // n >= 1
std::vector<SplitPmfEntry> split_pmf_rooted(long n);   // n >= 2

// Exact-rational versions, limited to n <= kExactPmfLimit.
std::vector<ExactSplitPmfEntry> split_pmf_doubly_exact(long n);
std::vector<ExactSplitPmfEntry> split_pmf_rooted_exact(long n);

}  // namespace mast

#endif
