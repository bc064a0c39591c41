#include "mast/dirichlet.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mast/quadrature.hpp"

namespace mast {

namespace {

// Every integral here has the shape
//     I = int over region of  x1^q1 x2^q2 x3^q3  dx1 dx2,   x3 = 1-x1-x2,
// where the q_i collect the density exponents and, for a moment E[X_i^beta],
// the extra beta on coordinate i. Each region is covered by charts chosen so
// that the singular power of the chart's radial/axis coordinate is absorbed
// exactly: an axis with net exponent q gets x = s^(1/(q+1)), a Duffy corner
// with net exponent q gets its radius substituted to land on s^0 or s^1.
// The transformed integrands are bounded with at worst C^1 corners, so the
// adaptive rule converges at the same cost for every beta in [0, 1/2].

struct ChartPoint {
  double v1, v2, v3;
  double w;
};

struct Chart {
  double x0, x1, y0, y1;
  std::function<ChartPoint(double, double)> map;
};

double ipow(double base, double q) { return std::pow(base, q); }

// ---- doubly-rooted region: square [0,1/2]^2 ------------------------------
// Density exponents (q1,q2,q3) = (-1/2,-1/2,-3/2) plus beta on coordinate i.

std::vector<Chart> doubly_charts(double q1, double q2, double q3) {
  std::vector<Chart> charts;
  const double a = 1.0 / (q1 + 1.0);  // v1 = s^a kills v1^q1 dv1
  const double b = 1.0 / (q2 + 1.0);  // v2 = t^b
  const double sa = ipow(0.25, 1.0 / a), sb = ipow(0.25, 1.0 / b);

  charts.push_back({0.0, sa, 0.0, sb, [=](double s, double t) {
                      const double v1 = ipow(s, a), v2 = ipow(t, b);
                      const double v3 = 1.0 - v1 - v2;
                      return ChartPoint{v1, v2, v3, a * b * ipow(v3, q3)};
                    }});
  charts.push_back({0.25, 0.5, 0.0, sb, [=](double v1, double t) {
                      const double v2 = ipow(t, b);
                      const double v3 = 1.0 - v1 - v2;
                      return ChartPoint{v1, v2, v3,
                                        b * ipow(v1, q1) * ipow(v3, q3)};
                    }});
  charts.push_back({0.0, sa, 0.25, 0.5, [=](double s, double v2) {
                      const double v1 = ipow(s, a);
                      const double v3 = 1.0 - v1 - v2;
                      return ChartPoint{v1, v2, v3,
                                        a * ipow(v2, q2) * ipow(v3, q3)};
                    }});
  // Duffy charts at the v3 -> 0 corner (1/2,1/2): p = 1/2-v1, q = 1/2-v2,
  // one chart per half {p >= q}, {q >= p}; radius p = s^r with r(q3+2) = 1.
  const double r = 1.0 / (q3 + 2.0);
  const double sr = ipow(0.25, 1.0 / r);
  charts.push_back({0.0, sr, 0.0, 1.0, [=](double s, double m) {
                      const double p = ipow(s, r), q = p * m;
                      const double v1 = 0.5 - p, v2 = 0.5 - q;
                      return ChartPoint{v1, v2, p + q,
                                        r * ipow(1.0 + m, q3) * ipow(v1, q1) *
                                            ipow(v2, q2)};
                    }});
  charts.push_back({0.0, sr, 0.0, 1.0, [=](double s, double m) {
                      const double q = ipow(s, r), p = q * m;
                      const double v1 = 0.5 - p, v2 = 0.5 - q;
                      return ChartPoint{v1, v2, p + q,
                                        r * ipow(1.0 + m, q3) * ipow(v1, q1) *
                                            ipow(v2, q2)};
                    }});
  return charts;
}

// ---- rooted region: {u1 <= u2 <= 1/2, u1+u2 >= 1/2} ----------------------
// Density exponents (q1,q2,q3) = (-3/2,-3/2,-1/2) plus beta on coordinate i.

std::vector<Chart> rooted_charts(double q1, double q2, double q3) {
  std::vector<Chart> charts;
  // u1 in [0,1/4]: u2 = 1/2 - u1*y (strip width u1 appears as a Jacobian
  // factor and tames the u1^{-3/2} vertex), then u1 = s^a.
  const double a = 1.0 / (q1 + 2.0);
  const double sa = ipow(0.25, 1.0 / a);
  charts.push_back({0.0, sa, 0.0, 1.0, [=](double s, double y) {
                      const double u1 = ipow(s, a);
                      const double u2 = 0.5 - u1 * y;
                      const double u3 = 1.0 - u1 - u2;
                      return ChartPoint{u1, u2, u3,
                                        a * ipow(u2, q2) * ipow(u3, q3)};
                    }});
  // u1 in [1/4,1/2]: Duffy at the u3 -> 0 corner (1/2,1/2) over the half
  // {A >= B}, A = 1/2-u1, B = 1/2-u2; radius A = s^r with r(q3+2) = 2.
  const double r = 2.0 / (q3 + 2.0);
  const double sr = ipow(0.25, 1.0 / r);
  charts.push_back({0.0, sr, 0.0, 1.0, [=](double s, double m) {
                      const double big_a = ipow(s, r), big_b = big_a * m;
                      const double u1 = 0.5 - big_a, u2 = 0.5 - big_b;
                      return ChartPoint{u1, u2, big_a + big_b,
                                        r * s * ipow(1.0 + m, q3) *
                                            ipow(u1, q1) * ipow(u2, q2)};
                    }});
  return charts;
}

std::vector<Chart> region_charts(DirichletRegion region, int moment_index,
                                 double beta) {
  const double add1 = moment_index == 0 ? beta : 0.0;
  const double add2 = moment_index == 1 ? beta : 0.0;
  const double add3 = moment_index == 2 ? beta : 0.0;
  if (region == DirichletRegion::DoublySplit)
    return doubly_charts(-0.5 + add1, -0.5 + add2, -1.5 + add3);
  return rooted_charts(-1.5 + add1, -1.5 + add2, -0.5 + add3);
}

struct RegionIntegral {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

// moment_index -1 integrates the bare density; `extra` multiplies the
// integrand pointwise (used for indicators).
template <typename Extra>
RegionIntegral integrate_region(DirichletRegion region, int moment_index,
                                double beta, const Extra& extra,
                                double quad_tol) {
  const std::vector<Chart> charts = region_charts(region, moment_index, beta);
  RegionIntegral out;
  QuadOptions opt;
  opt.abs_tol = quad_tol / static_cast<double>(charts.size());
  for (const Chart& chart : charts) {
    QuadResult r = integrate2d(
        [&](double x, double y) {
          const ChartPoint p = chart.map(x, y);
          return p.w * extra(p.v1, p.v2, p.v3);
        },
        chart.x0, chart.x1, chart.y0, chart.y1, opt);
    out.value += r.value;
    out.error += r.error;
    out.converged = out.converged && r.converged;
  }
  return out;
}

double one(double, double, double) { return 1.0; }

void require_canonical(const ConstrainedDirichlet& d) {
  const ConstrainedDirichlet want = d.region == DirichletRegion::RootedSplit
                                        ? ConstrainedDirichlet::rooted_split_law()
                                        : ConstrainedDirichlet::doubly_split_law();
  for (int i = 0; i < 3; ++i)
    if (d.parameters[i] != want.parameters[i])
      throw std::invalid_argument(
          "moment: only the two canonical split laws are supported");
}

}  // namespace

double normalizing_constant(const ConstrainedDirichlet& d, double quad_tol) {
  require_canonical(d);
  return integrate_region(d.region, -1, 0.0, one, quad_tol).value;
}

double moment(const ConstrainedDirichlet& d, int i, double beta,
              double quad_tol) {
  require_canonical(d);
  if (beta < 0.0) throw std::invalid_argument("moment: beta must be >= 0");
  if (i < 0 || i > 2) throw std::invalid_argument("moment: i must be 0..2");
  const RegionIntegral z = integrate_region(d.region, -1, 0.0, one, quad_tol);
  const RegionIntegral num =
      integrate_region(d.region, i, beta, one, quad_tol);
  return num.value / z.value;
}

MomentTable moment_table(double beta, double quad_tol) {
  if (beta < 0.0) throw std::invalid_argument("moment_table: beta must be >= 0");
  MomentTable out;
  out.beta = beta;
  out.method =
      "adaptive tensor Gauss-Kronrod 7-15 over power-substituted charts";
  double worst = 0.0;
  for (const DirichletRegion region :
       {DirichletRegion::RootedSplit, DirichletRegion::DoublySplit}) {
    const RegionIntegral z =
        integrate_region(region, -1, 0.0, one, quad_tol);
    if (!z.converged)
      throw std::runtime_error(
          "moment_table: normalizing constant did not converge");
    for (int i = 0; i < 3; ++i) {
      const RegionIntegral num =
          integrate_region(region, i, beta, one, quad_tol);
      const double m = num.value / z.value;
      (region == DirichletRegion::RootedSplit ? out.eu : out.ev)[i] = m;
      worst = std::max(worst, num.error / z.value + m * z.error / z.value);
    }
  }
  out.error_estimate = worst;
  return out;
}

double alpha_from_rooted(const MomentTable& m) {
  const double e1 = m.eu[0], e2 = m.eu[1], e3 = m.eu[2];
  return (1.0 - e1 * e1 - e2 * e2) / (e3 * e3);
}

double alpha_from_doubly(const MomentTable& m) {
  const double e1 = m.ev[0], e2 = m.ev[1], e3 = m.ev[2];
  const double denom = 1.0 - e1 * e1 - e2 * e2;
  if (std::abs(denom) < 1e-9)
    throw std::domain_error("alpha_from_doubly: denominator below 1e-9");
  return e3 * e3 / denom;
}

double alpha_from_rooted(double beta, double quad_tol) {
  return alpha_from_rooted(moment_table(beta, quad_tol));
}

double alpha_from_doubly(double beta, double quad_tol) {
  return alpha_from_doubly(moment_table(beta, quad_tol));
}

SolverResult solve_beta(double tolerance, double quad_tol) {
  if (tolerance < 1e-8)
    throw std::invalid_argument("solve_beta: tolerance must be >= 1e-8");
  double lo = 0.3, hi = 0.5;
  auto g = [&](double beta, MomentTable* table) {
    MomentTable m = moment_table(beta, quad_tol);
    const double value = alpha_from_rooted(m) - alpha_from_doubly(m);
    if (table) *table = std::move(m);
    return value;
  };
  const double glo = g(lo, nullptr), ghi = g(hi, nullptr);
  if (!(glo < 0.0 && ghi > 0.0))
    throw std::runtime_error(
        "solve_beta: no sign change on [0.3, 0.5]; endpoint values g(0.3)=" +
        std::to_string(glo) + " g(0.5)=" + std::to_string(ghi));

  SolverResult res;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    MomentTable table;
    const double gm = g(mid, &table);
    if (std::abs(gm) <= tolerance) {
      res.beta = mid;
      res.alpha = 0.5 * (alpha_from_rooted(table) + alpha_from_doubly(table));
      res.residual = std::abs(gm);
      res.moments = std::move(table);
      return res;
    }
    (gm < 0.0 ? lo : hi) = mid;
  }
  throw std::runtime_error("solve_beta: bisection failed to reach tolerance");
}

double region_probability(const ConstrainedDirichlet& d, int i, double lo,
                          double hi, double quad_tol) {
  require_canonical(d);
  if (i < 0 || i > 2)
    throw std::invalid_argument("region_probability: i must be 0..2");
  const RegionIntegral z = integrate_region(d.region, -1, 0.0, one, quad_tol);
  const RegionIntegral num = integrate_region(
      d.region, -1, 0.0,
      [&](double v1, double v2, double v3) {
        const double x = i == 0 ? v1 : i == 1 ? v2 : v3;
        return (x >= lo && x < hi) ? 1.0 : 0.0;
      },
      quad_tol);
  return num.value / z.value;
}

long region_violation_count(const ConstrainedDirichlet& d, double quad_tol) {
  require_canonical(d);
  const double eps = 1e-12;
  long violations = 0;
  auto check = [&](double v1, double v2, double v3) {
    const bool inside =
        d.region == DirichletRegion::DoublySplit
            ? (v1 >= -eps && v1 <= 0.5 + eps && v2 >= -eps &&
               v2 <= 0.5 + eps && v3 >= -eps)
            : (v1 >= -eps && v1 <= v2 + eps && v2 <= 0.5 + eps &&
               v3 >= -eps && v3 <= 0.5 + eps);
    if (!inside) ++violations;
    return 1.0;
  };
  integrate_region(d.region, -1, 0.0, check, quad_tol);
  return violations;
}

}  // namespace mast
