#include "raagham/flow.hpp"

#include <cmath>

#include "raagham/errors.hpp"

namespace raagham::dyn {

namespace {

using State = std::vector<Point>;

struct Integrator {
  const ProductField& field;
  const FlowOptions& opts;
  std::size_t halvings = 0;
  std::size_t steps = 0;
  State grad, mid;

  void velocity(const State& z, State& out) {
    field.gradient(z, grad);
    for (std::size_t j = 0; j < z.size(); ++j) {
      const double c = field.weights.empty() ? 1.0 : field.weights[j];
      out[j] = Point(grad[j].imag(), -grad[j].real()) / c;
    }
  }

  // One implicit midpoint step; false when the iteration does not settle.
  bool try_step(const State& z, double h, State& next) {
    State v(z.size());
    velocity(z, v);
    for (std::size_t j = 0; j < z.size(); ++j) next[j] = z[j] + h * v[j];  // explicit predictor
    for (int it = 0; it < opts.max_iterations; ++it) {
      for (std::size_t j = 0; j < z.size(); ++j) mid[j] = (z[j] + next[j]) / 2.0;
      velocity(mid, v);
      double change = 0.0, scale = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        const Point updated = z[j] + h * v[j];
        change = std::max(change, std::abs(updated - next[j]));
        scale = std::max(scale, std::abs(updated));
        next[j] = updated;
      }
      if (!std::isfinite(change)) return false;
      if (change <= opts.tolerance * (1.0 + scale)) return true;
    }
    return false;
  }

  void advance(State& z, double h, int depth) {
    State next(z.size());
    if (try_step(z, h, next)) {
      z = std::move(next);
      ++steps;
      for (const Point& p : z) {
        if (!(std::abs(p) <= opts.escape_radius)) throw IntegratorDivergence("trajectory left the numerical domain");
      }
      return;
    }
    if (depth >= opts.max_halvings) throw IntegratorDivergence("implicit midpoint failed after step halving");
    ++halvings;
    advance(z, h / 2, depth + 1);
    advance(z, h / 2, depth + 1);
  }
};

ProductField as_product(const HamiltonianField& f) {
  ProductField p;
  p.dim = 1;
  p.value = [&f](std::span<const Point> z) { return f.value(z[0]); };
  p.gradient = [&f](std::span<const Point> z, std::span<Point> g) { g[0] = f.gradient(z[0]); };
  return p;
}

// Tangent map of one implicit midpoint step: (I - h/2 A)^{-1} (I + h/2 A),
// A the Jacobian of X_H at the midpoint (from differences of the gradient).
std::array<double, 4> step_tangent(const HamiltonianField& f, Point a, Point b, double h) {
  const Point m = (a + b) / 2.0;
  const double d = 1e-7 * (1.0 + std::abs(m));
  const Point gx = (f.gradient(m + Point(d, 0)) - f.gradient(m - Point(d, 0))) / (2 * d);
  const Point gy = (f.gradient(m + Point(0, d)) - f.gradient(m - Point(0, d))) / (2 * d);
  // X = (H_y, -H_x): dX/dx = (H_yx, -H_xx), dX/dy = (H_yy, -H_xy).
  const double A00 = gx.imag(), A01 = gy.imag(), A10 = -gx.real(), A11 = -gy.real();
  const double k = h / 2;
  const double P00 = 1 - k * A00, P01 = -k * A01, P10 = -k * A10, P11 = 1 - k * A11;
  const double Q00 = 1 + k * A00, Q01 = k * A01, Q10 = k * A10, Q11 = 1 + k * A11;
  const double det = P00 * P11 - P01 * P10;
  const double I00 = P11 / det, I01 = -P01 / det, I10 = -P10 / det, I11 = P00 / det;
  return {I00 * Q00 + I01 * Q10, I00 * Q01 + I01 * Q11, I10 * Q00 + I11 * Q10, I10 * Q01 + I11 * Q11};
}

std::array<double, 4> multiply(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

ProductFlowResult flow_map(const ProductField& field, std::vector<Point> z0, double T,
                           std::size_t steps, const FlowOptions& opts) {
  if (steps == 0) throw InputError("flow needs at least one step");
  if (z0.size() != field.dim) throw InputError("flow state has the wrong dimension");
  Integrator in{field, opts, 0, 0, State(field.dim), State(field.dim)};
  const double h0 = field.value(z0);
  State z = z0;
  const double h = T / static_cast<double>(steps);
  for (std::size_t k = 0; k < steps; ++k) in.advance(z, h, 0);
  return {z, std::abs(field.value(z) - h0), in.steps, in.halvings};
}

FlowResult flow_map(const HamiltonianField& field, Point z0, double T, std::size_t steps,
                    const FlowOptions& opts) {
  if (steps == 0) throw InputError("flow needs at least one step");
  const ProductField pf = as_product(field);
  Integrator in{pf, opts, 0, 0, State(1), State(1)};
  FlowResult res;
  res.trajectory.push_back(z0);
  State z{z0};
  const double h = T / static_cast<double>(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const Point before = z[0];
    in.advance(z, h, 0);
    if (opts.track_jacobian) {
      // Halved steps are folded into one tangent update at the full step.
      res.jacobian = multiply(step_tangent(field, before, z[0], h), res.jacobian);
    }
    if (opts.record_every && (k + 1) % opts.record_every == 0 && k + 1 < steps) res.trajectory.push_back(z[0]);
  }
  res.final = z[0];
  res.trajectory.push_back(res.final);
  res.energy_drift = std::abs(field.value(res.final) - field.value(z0));
  res.steps = in.steps;
  res.halvings = in.halvings;
  return res;
}

}  // namespace raagham::dyn
