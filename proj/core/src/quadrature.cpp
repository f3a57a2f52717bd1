#include "raagham/quadrature.hpp"

#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <queue>
#include <vector>

#include "raagham/errors.hpp"

namespace raagham::numeric {

namespace {

constexpr unsigned kOrder = 10;

struct Panel {
  double x0, x1, y0, y1;
  double coarse;  // single-panel rule
  double fine;    // sum over the four children
  double error() const { return std::abs(fine - coarse); }
  bool operator<(const Panel& o) const { return error() < o.error(); }
};

double gauss_panel(const std::function<double(double, double)>& f, double x0, double x1, double y0,
                   double y1) {
  using G = boost::math::quadrature::gauss<double, kOrder>;
  static const auto& nodes = G::abscissa();
  static const auto& weights = G::weights();
  // Nodes are stored for [0, 1] of the symmetric rule on [-1, 1].
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    pts.emplace_back(nodes[i], weights[i]);
    if (nodes[i] != 0.0) pts.emplace_back(-nodes[i], weights[i]);
  }
  const double hx = (x1 - x0) / 2, cx = (x0 + x1) / 2;
  const double hy = (y1 - y0) / 2, cy = (y0 + y1) / 2;
  double sum = 0.0;
  for (auto [u, wu] : pts) {
    for (auto [v, wv] : pts) sum += wu * wv * f(cx + hx * u, cy + hy * v);
  }
  return sum * hx * hy;
}

Panel make_panel(const std::function<double(double, double)>& f, double x0, double x1, double y0,
                 double y1, double coarse) {
  const double xm = (x0 + x1) / 2, ym = (y0 + y1) / 2;
  const double fine = gauss_panel(f, x0, xm, y0, ym) + gauss_panel(f, xm, x1, y0, ym) +
                      gauss_panel(f, x0, xm, ym, y1) + gauss_panel(f, xm, x1, ym, y1);
  return {x0, x1, y0, y1, coarse, fine};
}

}  // namespace

QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double x0, double x1,
                              double y0, double y1, double rel_tol, double abs_tol,
                              std::size_t max_panels) {
  std::priority_queue<Panel> heap;
  heap.push(make_panel(f, x0, x1, y0, y1, gauss_panel(f, x0, x1, y0, y1)));
  double value = heap.top().fine, error = heap.top().error();
  std::size_t panels = 1;
  while (error > rel_tol * std::abs(value) + abs_tol) {
    if (panels >= max_panels) throw ConstructionError("2D quadrature did not converge");
    Panel p = heap.top();
    heap.pop();
    value -= p.fine;
    error -= p.error();
    const double xm = (p.x0 + p.x1) / 2, ym = (p.y0 + p.y1) / 2;
    // Children reuse their own single-panel values as the coarse rule.
    for (auto [a0, a1, b0, b1] : {std::array{p.x0, xm, p.y0, ym}, std::array{xm, p.x1, p.y0, ym},
                                  std::array{p.x0, xm, ym, p.y1}, std::array{xm, p.x1, ym, p.y1}}) {
      Panel c = make_panel(f, a0, a1, b0, b1, gauss_panel(f, a0, a1, b0, b1));
      value += c.fine;
      error += c.error();
      heap.push(c);
    }
    panels += 3;
  }
  return {value, error, panels};
}

}  // namespace raagham::numeric
