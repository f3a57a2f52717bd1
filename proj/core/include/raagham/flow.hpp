#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "raagham/field.hpp"

namespace raagham::dyn {

struct FlowOptions {
  double tolerance = 1e-12;     // fixed-point increment, relative to 1 + |z|
  int max_iterations = 50;
  int max_halvings = 20;        // per step, before IntegratorDivergence
  std::size_t record_every = 0; // 0: keep only the endpoints
  double escape_radius = 1e6;
  bool track_jacobian = false;  // propagate the tangent map (2D flows only)
};

struct FlowResult {
  std::vector<Point> trajectory;  // sampled states, first and last included
  Point final{};
  double energy_drift = 0.0;      // |H(final) - H(initial)|
  std::size_t steps = 0;          // accepted substeps
  std::size_t halvings = 0;
  std::array<double, 4> jacobian{1, 0, 0, 1};  // row-major d(final)/d(z0) when tracked
};

/// Implicit midpoint integration of z' = X_H(z) = (dH/dy, -dH/dx) over
/// [0, T] with `steps` equal steps. Each step solves the midpoint equation by
/// fixed-point iteration; a step that fails to converge is split in two.
/// Throws IntegratorDivergence after max_halvings or when |z| exceeds
/// escape_radius, InputError for steps == 0.
FlowResult flow_map(const HamiltonianField& field, Point z0, double T, std::size_t steps,
                    const FlowOptions& opts = {});

/// Hamiltonian on a product of planes (C^n with form sum_j c_j omega_0).
struct ProductField {
  std::size_t dim = 1;
  std::function<double(std::span<const Point>)> value;
  /// Writes (dH/dx_j + i dH/dy_j) for every factor.
  std::function<void(std::span<const Point>, std::span<Point>)> gradient;
  std::vector<double> weights;  // c_j; empty means all 1
};

struct ProductFlowResult {
  std::vector<Point> final;
  double energy_drift = 0.0;
  std::size_t steps = 0;
  std::size_t halvings = 0;
};

/// Same scheme on the product: z_j' = X_H in factor j, scaled by 1/c_j.
ProductFlowResult flow_map(const ProductField& field, std::vector<Point> z0, double T,
                           std::size_t steps, const FlowOptions& opts = {});

}  // namespace raagham::dyn
