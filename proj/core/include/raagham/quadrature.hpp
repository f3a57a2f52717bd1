#pragma once

#include <cstddef>
#include <functional>

namespace raagham::numeric {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;   // estimated absolute error
  std::size_t panels = 0;
};

/// Adaptive tensor Gauss-Legendre integration over [x0,x1] x [y0,y1].
/// Each panel is compared with its four children; the panel with the largest
/// discrepancy is split until the summed estimate is below
/// rel_tol * |value| + abs_tol. Throws ConstructionError after max_panels.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double x0, double x1,
                              double y0, double y1, double rel_tol = 1e-10, double abs_tol = 0.0,
                              std::size_t max_panels = 200000);

}  // namespace raagham::numeric
