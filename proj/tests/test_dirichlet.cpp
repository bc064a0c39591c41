#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "support.hpp"

#include "mast/dirichlet.hpp"
#include "mast/quadrature.hpp"

using namespace mast;
using namespace mast_tests;

TEST_CASE("quadrature rule reproduces known integrals") {
  const auto poly = [](double x) { return x * x * x * x * x; };
  CHECK(std::abs(integrate1d(poly, 0, 1).value - 1.0 / 6.0) < 1e-13);
  const auto arctan = [](double x) { return 4.0 / (1.0 + x * x); };
  CHECK(std::abs(integrate1d(arctan, 0, 1).value - std::numbers::pi) < 1e-12);

  const auto expxy = [](double x, double y) { return std::exp(x + y); };
  const double e1 = std::numbers::e - 1.0;
  CHECK(std::abs(integrate2d(expxy, 0, 1, 0, 1).value - e1 * e1) < 1e-11);
  // Integrable endpoint singularity.
  const auto invsqrt = [](double x) { return 1.0 / std::sqrt(x); };
  QuadOptions opt;
  opt.abs_tol = 1e-9;
  opt.max_depth = 45;
  CHECK(std::abs(integrate1d(invsqrt, 0, 1, opt).value - 2.0) < 1e-7);
}

TEST_CASE("normalizing constants are finite and positive") {
  CHECK(normalizing_constant(ConstrainedDirichlet::rooted_split_law()) > 0);
  CHECK(normalizing_constant(ConstrainedDirichlet::doubly_split_law()) > 0);
}

TEST_CASE("moments at beta = 0 are exactly 1") {
  for (const auto law : {ConstrainedDirichlet::rooted_split_law(),
                         ConstrainedDirichlet::doubly_split_law()})
    for (int i = 0; i < 3; ++i)
      CHECK(moment(law, i, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("doubly law is symmetric in the first two coordinates") {
  const auto law = ConstrainedDirichlet::doubly_split_law();
  for (double beta : {0.1, 0.25, 0.4464, 0.5})
    CHECK(std::abs(moment(law, 0, beta) - moment(law, 1, beta)) < 1e-9);
}

TEST_CASE("moments decrease strictly in beta") {
  for (const auto law : {ConstrainedDirichlet::rooted_split_law(),
                         ConstrainedDirichlet::doubly_split_law()})
    for (int i = 0; i < 3; ++i) {
      double prev = 1.0 + 1e-12;
      for (int k = 0; k <= 50; ++k) {
        const double beta = 0.5 * k / 50.0;
        const double m = moment(law, i, beta);
        CHECK(m < prev);
        CHECK(m > 0.0);
        CHECK(m <= 1.0);
        prev = m;
      }
    }
}

TEST_CASE("quadrature never leaves the regions") {
  CHECK(region_violation_count(ConstrainedDirichlet::rooted_split_law()) == 0);
  CHECK(region_violation_count(ConstrainedDirichlet::doubly_split_law()) == 0);
}

TEST_CASE("bin probabilities sum to one") {
  for (const auto law : {ConstrainedDirichlet::rooted_split_law(),
                         ConstrainedDirichlet::doubly_split_law()})
    for (int i = 0; i < 3; ++i) {
      double total = 0;
      for (int b = 0; b < 20; ++b)
        total += region_probability(law, i, b / 20.0, (b + 1) / 20.0, 1e-5);
      CHECK(std::abs(total - 1.0) < 1e-3);
    }
}

TEST_CASE("alpha expressions behave as the fixed point demands") {
  // At beta = 0 every moment is 1: both sides evaluate to -1.
  CHECK(alpha_from_rooted(0.0) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(alpha_from_doubly(0.0) == doctest::Approx(-1.0).epsilon(1e-9));

  double prev = -1e9;
  for (int k = 0; k <= 10; ++k) {
    const double beta = 0.3 + 0.2 * k / 10.0;
    const double a = alpha_from_rooted(beta);
    CHECK(a > prev);
    prev = a;
  }
  CHECK(alpha_from_rooted(0.4464) == doctest::Approx(0.859).epsilon(0.004));
  CHECK(alpha_from_doubly(0.4464) == doctest::Approx(0.859).epsilon(0.004));
}

TEST_CASE("solve_beta lands in the published bracket") {
  const SolverResult r = solve_beta(1e-6);
  CHECK(r.beta > 0.4464);
  CHECK(r.beta < 0.4465);
  CHECK(r.alpha > 0.854);
  CHECK(r.alpha < 0.864);
  CHECK(r.residual <= 1e-6);
  CHECK(r.beta > 0.0);
  CHECK(r.beta < 0.5);
  CHECK(r.alpha > 0.0);

  // The two alpha routes agree at the solution.
  CHECK(std::abs(alpha_from_rooted(r.moments) - alpha_from_doubly(r.moments)) <
        1e-4);

  // Heuristic identity residuals at the solved point.
  const auto& m = r.moments;
  const double res1 = std::abs(1.0 - m.eu[0] * m.eu[0] - m.eu[1] * m.eu[1] -
                               r.alpha * m.eu[2] * m.eu[2]);
  const double res2 =
      std::abs(r.alpha - r.alpha * m.ev[0] * m.ev[0] -
               r.alpha * m.ev[1] * m.ev[1] - m.ev[2] * m.ev[2]);
  CHECK(res1 <= 1e-4);
  CHECK(res2 <= 1e-4);

  CHECK_THROWS_AS(solve_beta(1e-9), std::invalid_argument);
}

TEST_CASE("halving the quadrature tolerance barely moves beta") {
  const SolverResult coarse = solve_beta(1e-6, 2e-7);
  const SolverResult fine = solve_beta(1e-6, 1e-7);
  CHECK(std::abs(coarse.beta - fine.beta) < 1e-4);
}

TEST_CASE("quadrature moments match the exact finite-n pmf oracle") {
  // Lemmas: the finite-n split-size laws converge to the Dirichlet laws, so
  // the discrete expectations approximate the continuum moments. n = 2000
  // here; the acceptance suite repeats this at n = 5000.
  const double beta = 0.4464;
  const auto rooted = ConstrainedDirichlet::rooted_split_law();
  const auto doubly = ConstrainedDirichlet::doubly_split_law();
  const std::array<double, 3> oracle_rooted = pmf_moments_rooted(2000, beta);
  const std::array<double, 3> oracle_doubly = pmf_moments_doubly(2000, beta);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(moment(rooted, i, beta) - oracle_rooted[i]) < 8e-3);
    CHECK(std::abs(moment(doubly, i, beta) - oracle_doubly[i]) < 8e-3);
  }
}

TEST_CASE("finite-n marginals converge to the Dirichlet laws in TV") {
  // 20 equal-width bins per coordinate at n = 2000, total variation <= 0.05.
  const long n = 2000;
  const auto doubly_pmf = split_pmf_doubly(n);
  const auto rooted_pmf = split_pmf_rooted(n);
  for (int i = 0; i < 3; ++i) {
    for (int which = 0; which < 2; ++which) {
      const bool is_doubly = which == 0;
      std::vector<double> finite(20, 0.0);
      for (const auto& e : (is_doubly ? doubly_pmf : rooted_pmf)) {
        const double x =
            static_cast<double>(e.sizes[i]) / static_cast<double>(n);
        int b = static_cast<int>(x * 20.0);
        if (b > 19) b = 19;
        finite[b] += e.probability;
      }
      const auto law = is_doubly ? ConstrainedDirichlet::doubly_split_law()
                                 : ConstrainedDirichlet::rooted_split_law();
      double tv = 0;
      for (int b = 0; b < 20; ++b) {
        const double q =
            region_probability(law, i, b / 20.0, (b + 1) / 20.0, 1e-5);
        tv += std::abs(finite[b] - q);
      }
      tv /= 2.0;
      CHECK(tv < 0.05);
    }
  }
}

TEST_CASE("invalid inputs are rejected") {
  const auto law = ConstrainedDirichlet::rooted_split_law();
  CHECK_THROWS_AS(moment(law, 3, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(moment(law, 0, -0.1), std::invalid_argument);
  ConstrainedDirichlet bogus = law;
  bogus.parameters[0] = -1.0;
  CHECK_THROWS_AS(moment(bogus, 0, 0.3), std::invalid_argument);
}
