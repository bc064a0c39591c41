// Adaptive 2-D quadrature on rectangles: a tensor Gauss-Kronrod 7-15 rule
// with quadrant subdivision. Integrands are expected to be continuous; the
// error estimate is |K15xK15 - G7xG7| per panel.
#ifndef MAST_QUADRATURE_HPP
#define MAST_QUADRATURE_HPP

#include <functional>

namespace mast {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;       // accumulated estimate over accepted panels
  long evaluations = 0;
  bool converged = true;    // false if the depth budget ran out somewhere
};

struct QuadOptions {
  double abs_tol = 1e-8;
  int max_depth = 28;
};

QuadResult integrate2d(const std::function<double(double, double)>& f,
                       double x0, double x1, double y0, double y1,
                       const QuadOptions& opt = {});

/// 1-D counterpart, same rule.
QuadResult integrate1d(const std::function<double(double)>& f, double a,
                       double b, const QuadOptions& opt = {});

}  // namespace mast

#endif
