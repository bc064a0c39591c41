#include "mast/split_pmf.hpp"

#include <cmath>
#include <stdexcept>

#include "mast/counting.hpp"

namespace mast {

namespace {

struct ExactTables {
  std::vector<BigInt> fact;  // 0..n
  std::vector<BigInt> c;     // 0..n+2

  explicit ExactTables(long n) {
    fact.resize(n + 1);
    fact[0] = 1;
    for (long i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    c.resize(n + 3);
    for (long m = 0; m <= n + 2; ++m)
      c[m] = (m <= 3) ? BigInt(1) : c[m - 1] * (2 * m - 5);
  }

  BigRational term(long n, long a, long b, long cc, int shift_a, int shift_b,
                   int shift_c, long denom_index) const {
    BigInt num = fact[n] / (fact[a] * fact[b] * fact[cc]);
    num *= c[a + shift_a];
    num *= c[b + shift_b];
    num *= c[cc + shift_c];
    return BigRational(num, c[denom_index]);
  }
};

double log_term(long n, long a, long b, long cc, int sa, int sb, int sc,
                long denom_index) {
  const double log_multinom = std::lgamma(n + 1.0) - std::lgamma(a + 1.0) -
                              std::lgamma(b + 1.0) - std::lgamma(cc + 1.0);
  return log_multinom + log_count_trees(a + sa) + log_count_trees(b + sb) +
         log_count_trees(cc + sc) - log_count_trees(denom_index);
}

template <typename Emit>
void enumerate_doubly(long n, Emit emit) {
  for (long l1 = 0; 2 * l1 < n; ++l1)
    for (long l2 = 0; 2 * l2 <= n && l1 + l2 <= n; ++l2)
      emit(l1, l2, n - l1 - l2);
}

template <typename Emit>
void enumerate_rooted(long n, Emit emit) {
  for (long k1 = 0; 2 * k1 < n + 1; ++k1)
    for (long k2 = k1; 2 * k2 < n + 1 && k1 + k2 <= n; ++k2) {
      const long k3 = n - k1 - k2;
      if (2 * k3 <= n - 1) emit(k1, k2, k3);
    }
}

}  // namespace

std::vector<ExactSplitPmfEntry> split_pmf_doubly_exact(long n) {
  if (n < 1) throw std::invalid_argument("split_pmf_doubly: n must be >= 1");
  if (n > kExactPmfLimit)
    throw std::invalid_argument("split_pmf_doubly_exact: n above exact limit");
  ExactTables tab(n);
  std::vector<ExactSplitPmfEntry> out;
  enumerate_doubly(n, [&](long l1, long l2, long l3) {
    out.push_back({{l1, l2, l3}, tab.term(n, l1, l2, l3, 2, 2, 1, n + 2)});
  });
  return out;
}

std::vector<ExactSplitPmfEntry> split_pmf_rooted_exact(long n) {
  if (n < 2) throw std::invalid_argument("split_pmf_rooted: n must be >= 2");
  if (n > kExactPmfLimit)
    throw std::invalid_argument("split_pmf_rooted_exact: n above exact limit");
  ExactTables tab(n);
  std::vector<ExactSplitPmfEntry> out;
  enumerate_rooted(n, [&](long k1, long k2, long k3) {
    BigRational p = tab.term(n, k1, k2, k3, 1, 1, 2, n + 1);
    if (k1 == k2) p /= 2;
    out.push_back({{k1, k2, k3}, std::move(p)});
  });
  return out;
}

std::vector<SplitPmfEntry> split_pmf_doubly(long n) {
  if (n < 1) throw std::invalid_argument("split_pmf_doubly: n must be >= 1");
  std::vector<SplitPmfEntry> out;
  if (n <= kExactPmfLimit) {
    for (const auto& e : split_pmf_doubly_exact(n))
      out.push_back({e.sizes, e.probability.convert_to<double>()});
    return out;
  }
  enumerate_doubly(n, [&](long l1, long l2, long l3) {
    out.push_back(
        {{l1, l2, l3}, std::exp(log_term(n, l1, l2, l3, 2, 2, 1, n + 2))});
  });
  return out;
}

std::vector<SplitPmfEntry> split_pmf_rooted(long n) {
  if (n < 2) throw std::invalid_argument("split_pmf_rooted: n must be >= 2");
  std::vector<SplitPmfEntry> out;
  if (n <= kExactPmfLimit) {
    for (const auto& e : split_pmf_rooted_exact(n))
      out.push_back({e.sizes, e.probability.convert_to<double>()});
    return out;
  }
  enumerate_rooted(n, [&](long k1, long k2, long k3) {
    double p = std::exp(log_term(n, k1, k2, k3, 1, 1, 2, n + 1));
    if (k1 == k2) p *= 0.5;
    out.push_back({{k1, k2, k3}, p});
  });
  return out;
}

}  // namespace mast
