#include "mast/quadrature.hpp"

#include <array>
#include <cmath>

namespace mast {

namespace {

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1] (QUADPACK dqk15).
// Even-indexed abscissae are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kWg = {0.129484966168870, 0.279705391489277,
                                       0.381830050505119, 0.417959183673469};

struct Nodes {
  std::array<double, 15> x;   // scaled abscissae
  std::array<double, 15> wk;  // Kronrod weights (scaled)
  std::array<double, 15> wg;  // Gauss weights (scaled; zero off Gauss nodes)
};

Nodes scaled_nodes(double a, double b) {
  Nodes n{};
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (int i = 0; i < 7; ++i) {
    n.x[i] = c - h * kXgk[i];
    n.x[14 - i] = c + h * kXgk[i];
    n.wk[i] = n.wk[14 - i] = h * kWgk[i];
  }
  n.x[7] = c;
  n.wk[7] = h * kWgk[7];
  for (int i = 0; i < 15; ++i) n.wg[i] = 0.0;
  for (int j = 0; j < 3; ++j) {
    n.wg[2 * j + 1] = h * kWg[j];
    n.wg[13 - 2 * j] = h * kWg[j];
  }
  n.wg[7] = h * kWg[3];
  return n;
}

struct PanelEstimate {
  double kronrod;
  double gauss;
};

PanelEstimate panel2d(const std::function<double(double, double)>& f,
                      double x0, double x1, double y0, double y1,
                      long* evals) {
  const Nodes nx = scaled_nodes(x0, x1);
  const Nodes ny = scaled_nodes(y0, y1);
  double k = 0.0, g = 0.0;
  for (int i = 0; i < 15; ++i) {
    double row_k = 0.0, row_g = 0.0;
    for (int j = 0; j < 15; ++j) {
      const double v = f(nx.x[i], ny.x[j]);
      row_k += ny.wk[j] * v;
      row_g += ny.wg[j] * v;
    }
    k += nx.wk[i] * row_k;
    g += nx.wg[i] * row_g;
    *evals += 15;
  }
  return {k, g};
}

void refine2d(const std::function<double(double, double)>& f, double x0,
              double x1, double y0, double y1, double tol, int depth,
              const QuadOptions& opt, QuadResult* out) {
  const PanelEstimate e = panel2d(f, x0, x1, y0, y1, &out->evaluations);
  const double err = std::abs(e.kronrod - e.gauss);
  if (err <= tol || depth >= opt.max_depth) {
    out->value += e.kronrod;
    out->error += err;
    if (err > tol) out->converged = false;
    return;
  }
  const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
  refine2d(f, x0, xm, y0, ym, tol / 4, depth + 1, opt, out);
  refine2d(f, xm, x1, y0, ym, tol / 4, depth + 1, opt, out);
  refine2d(f, x0, xm, ym, y1, tol / 4, depth + 1, opt, out);
  refine2d(f, xm, x1, ym, y1, tol / 4, depth + 1, opt, out);
}

void refine1d(const std::function<double(double)>& f, double a, double b,
              double tol, int depth, const QuadOptions& opt, QuadResult* out) {
  const Nodes n = scaled_nodes(a, b);
  double k = 0.0, g = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double v = f(n.x[i]);
    k += n.wk[i] * v;
    g += n.wg[i] * v;
  }
  out->evaluations += 15;
  const double err = std::abs(k - g);
  if (err <= tol || depth >= opt.max_depth) {
    out->value += k;
    out->error += err;
    if (err > tol) out->converged = false;
    return;
  }
  const double m = 0.5 * (a + b);
  refine1d(f, a, m, tol / 2, depth + 1, opt, out);
  refine1d(f, m, b, tol / 2, depth + 1, opt, out);
}

}  // namespace

QuadResult integrate2d(const std::function<double(double, double)>& f,
                       double x0, double x1, double y0, double y1,
                       const QuadOptions& opt) {
  QuadResult out;
  refine2d(f, x0, x1, y0, y1, opt.abs_tol, 0, opt, &out);
  return out;
}

QuadResult integrate1d(const std::function<double(double)>& f, double a,
                       double b, const QuadOptions& opt) {
  QuadResult out;
  refine1d(f, a, b, opt.abs_tol, 0, opt, &out);
  return out;
}

}  // namespace mast
