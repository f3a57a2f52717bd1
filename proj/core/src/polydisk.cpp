#include "raagham/polydisk.hpp"

#include <cmath>

#include "raagham/errors.hpp"
#include "raagham/hyperlift.hpp"
#include "raagham/parallel.hpp"

namespace raagham::dyn {

double PolydiskField::value(const std::vector<Point>& z) const {
  double v = base.value(z[0]);
  for (std::size_t j = 1; j < n; ++j) v *= hyper::mollifier(eta_eps, z[j]);
  return v;
}

std::vector<Point> PolydiskField::gradient(const std::vector<Point>& z) const {
  std::vector<double> eta(n);
  std::vector<Point> deta(n);
  for (std::size_t j = 1; j < n; ++j) {
    eta[j] = hyper::mollifier(eta_eps, z[j]);
    deta[j] = hyper::mollifier_gradient(eta_eps, z[j]);
  }
  const double k = base.value(z[0]);
  std::vector<Point> g(n);
  for (std::size_t j = 0; j < n; ++j) {
    double others = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
      if (i != j) others *= eta[i];
    }
    g[j] = j == 0 ? base.gradient(z[0]) * others : k * others * deta[j];
  }
  return g;
}

ProductField PolydiskField::product() const {
  ProductField p;
  p.dim = n;
  p.value = [self = *this](std::span<const Point> z) { return self.value({z.begin(), z.end()}); };
  p.gradient = [self = *this](std::span<const Point> z, std::span<Point> out) {
    const auto g = self.gradient({z.begin(), z.end()});
    std::copy(g.begin(), g.end(), out.begin());
  };
  p.weights.assign(n, 1.0);
  p.weights[0] = c;
  return p;
}

PolydiskField polydisk_extend(const HamiltonianField& k, std::size_t n, double eta_eps, double c) {
  if (n < 2) throw InputError("polydisk extension needs n >= 2");
  if (!(c > 0)) throw InputError("polydisk form needs c > 0");
  return {k, n, eta_eps, c};
}

SliceReport polydisk_slice_check(const PolydiskField& h, const std::vector<Point>& pts, double T,
                                 std::size_t steps, std::size_t flow_points) {
  SliceReport r;
  r.n = h.n;
  r.points = pts.size();
  r.T = T;
  for (const Point& z1 : pts) {
    std::vector<Point> z(h.n, Point(0, 0));
    z[0] = z1;
    r.value_gap = std::max(r.value_gap, std::abs(h.value(z) - h.base.value(z1)));
    const auto g = h.gradient(z);
    r.gradient_gap = std::max(r.gradient_gap, std::abs(g[0] - h.base.gradient(z1)));
    for (std::size_t j = 1; j < h.n; ++j) r.transverse_gradient = std::max(r.transverse_gradient, std::abs(g[j]));
  }
  const std::size_t m = std::min(flow_points, pts.size());
  std::vector<double> gap(m), drift(m);
  const ProductField pf = h.product();
  // The k-flow uses the same form on the first factor.
  HamiltonianField scaled = h.base;
  scaled.value = [f = h.base, c = h.c](Point z) { return f.value(z) / c; };
  scaled.gradient = [f = h.base, c = h.c](Point z) { return f.gradient(z) / c; };
  parallel_for(m, [&](std::size_t i) {
    std::vector<Point> z(h.n, Point(0, 0));
    z[0] = pts[i];
    const auto full = flow_map(pf, z, T, steps);
    const auto base = flow_map(scaled, pts[i], T, steps);
    gap[i] = std::abs(full.final[0] - base.final);
    for (std::size_t j = 1; j < h.n; ++j) drift[i] = std::max(drift[i], std::abs(full.final[j]));
  });
  for (std::size_t i = 0; i < m; ++i) {
    r.flow_gap = std::max(r.flow_gap, gap[i]);
    r.transverse_drift = std::max(r.transverse_drift, drift[i]);
  }
  return r;
}

nlohmann::json SliceReport::to_json() const {
  return {{"n", n},
          {"points", points},
          {"T", T},
          {"value_gap", value_gap},
          {"gradient_gap", gradient_gap},
          {"transverse_gradient", transverse_gradient},
          {"flow_gap", flow_gap},
          {"transverse_drift", transverse_drift}};
}

}  // namespace raagham::dyn
