// The two constrained Dirichlet laws that arise as limits of the split-size
// distributions, their moments E[X_i^beta], and the fixed point defining the
// growth exponent:
//
//   rooted law:  Dirichlet(-1/2,-1/2,1/2) on {u1 <= u2 <= 1/2, u3 <= 1/2}
//   doubly law:  Dirichlet(1/2,1/2,-1/2) on {v1 <= 1/2, v2 <= 1/2}
//
//   alpha = (1 - E[U1^b]^2 - E[U2^b]^2) / E[U3^b]^2
//         = E[V3^b]^2 / (1 - E[V1^b]^2 - E[V2^b]^2)
//
// beta is the unique solution in the bracket; alpha the common value.
//
// Moments are 2-D integrals over polygonal regions with x^{-3/2} and
// x^{-1/2} boundary singularities. Each region is covered by a few charts
// (square-root substitutions on singular coordinates, Duffy maps at the
// singular corners) whose transformed integrands are bounded, then handled
// by adaptive Gauss-Kronrod quadrature.
#ifndef MAST_DIRICHLET_HPP
#define MAST_DIRICHLET_HPP

#include <array>
#include <string>

namespace mast {

enum class DirichletRegion { RootedSplit, DoublySplit };

struct ConstrainedDirichlet {
  std::array<double, 3> parameters;
  DirichletRegion region;

  static ConstrainedDirichlet rooted_split_law() {
    return {{-0.5, -0.5, 0.5}, DirichletRegion::RootedSplit};
  }
  static ConstrainedDirichlet doubly_split_law() {
    return {{0.5, 0.5, -0.5}, DirichletRegion::DoublySplit};
  }
};

struct MomentTable {
  double beta = 0.0;
  std::array<double, 3> eu{};  // E[U_i^beta], rooted law
  std::array<double, 3> ev{};  // E[V_i^beta], doubly law
  std::string method;
  double error_estimate = 0.0;
};

struct SolverResult {
  double beta = 0.0;
  double alpha = 0.0;
  double residual = 0.0;
  MomentTable moments;
};

/// E[X_i^beta] under d (i in {0,1,2}), absolute error near quad_tol.
/// Throws std::invalid_argument unless d is one of the two canonical laws.
double moment(const ConstrainedDirichlet& d, int i, double beta,
              double quad_tol = 1e-7);

/// All six moments at one beta, sharing the normalizing constants.
MomentTable moment_table(double beta, double quad_tol = 1e-7);

double alpha_from_rooted(double beta, double quad_tol = 1e-7);
double alpha_from_doubly(double beta, double quad_tol = 1e-7);
double alpha_from_rooted(const MomentTable& m);
double alpha_from_doubly(const MomentTable& m);

/// Bisection on alpha_from_rooted - alpha_from_doubly over [0.3, 0.5].
/// Requires tolerance >= 1e-8 and a sign change on the bracket.
SolverResult solve_beta(double tolerance, double quad_tol = 1e-7);

/// P(X_i in [lo, hi]) under d. The integrand includes an indicator, so this
/// is slower and a little less accurate than the smooth moments.
double region_probability(const ConstrainedDirichlet& d, int i, double lo,
                          double hi, double quad_tol = 1e-6);

/// Normalizing constant of the (unnormalized) density over the region.
double normalizing_constant(const ConstrainedDirichlet& d,
                            double quad_tol = 1e-7);

/// Runs the moment quadrature while checking every evaluation point against
/// the region constraints; returns how many fell outside (zero by
/// construction of the charts).
long region_violation_count(const ConstrainedDirichlet& d,
                            double quad_tol = 1e-7);

}  // namespace mast

#endif
