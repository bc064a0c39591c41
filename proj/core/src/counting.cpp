#include "mast/counting.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mast {

BigInt count_trees(long m) {
  if (m < 0) throw std::invalid_argument("count_trees: m must be >= 0");
  BigInt c = 1;
  for (long f = 1; f <= 2 * m - 5; f += 2) c *= f;
  return c;
}

double log_count_trees(long m) {
  if (m < 0) throw std::invalid_argument("log_count_trees: m must be >= 0");
  if (m <= 2) return 0.0;
  // c_m = (2m-4)! / (2^{m-2} (m-2)!)
  return std::lgamma(2.0 * m - 3.0) - (m - 2) * std::numbers::ln2 -
         std::lgamma(m - 1.0);
}

std::pair<double, double> asymptotic_ratio_check(long n) {
  if (n < 10) throw std::invalid_argument("asymptotic_ratio_check: n >= 10");
  const double log_fact_n = std::lgamma(n + 1.0);
  const double half_log_pi = 0.5 * std::log(std::numbers::pi);
  const double first = log_count_trees(n + 2) - log_fact_n -
                       (-half_log_pi + n * std::numbers::ln2 - 0.5 * std::log(n));
  const double second =
      log_count_trees(n + 1) - log_fact_n -
      (-half_log_pi + (n - 1) * std::numbers::ln2 - 1.5 * std::log(n));
  return {std::exp(first), std::exp(second)};
}

}  // namespace mast
