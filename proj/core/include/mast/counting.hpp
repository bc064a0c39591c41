// Counting leaf-labeled binary trees: c_m = 1*3*5*...*(2m-5), the odd double
// factorial, with c_0 = c_1 = c_2 = 1 by the empty-product convention.
#ifndef MAST_COUNTING_HPP
#define MAST_COUNTING_HPP

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace mast {

using BigInt = boost::multiprecision::cpp_int;

/// Exact number of trees on m labeled leaves.
BigInt count_trees(long m);

/// log c_m, usable far beyond exact-arithmetic comfort.
double log_count_trees(long m);

/// Ratios of the computed values to the closed asymptotic forms
///   c_{n+2}/n! ~ pi^{-1/2} 2^n n^{-1/2}
///   c_{n+1}/n! ~ pi^{-1/2} 2^{n-1} n^{-3/2},
/// evaluated in log space. Both tend to 1 as n grows.
std::pair<double, double> asymptotic_ratio_check(long n);

}  // namespace mast

#endif
