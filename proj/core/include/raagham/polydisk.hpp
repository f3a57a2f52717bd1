#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "raagham/field.hpp"
#include "raagham/flow.hpp"

namespace raagham::dyn {

/// h(z_1, ..., z_n) = k(z_1) eta(z_2) ... eta(z_n) on the polydisk with form
/// c omega_0 + omega_0 + ... + omega_0, eta the radial mollifier with
/// eta(0) = 1 and d eta(0) = 0.
struct PolydiskField {
  HamiltonianField base;
  std::size_t n = 2;
  double eta_eps = 1.0;
  double c = 1.0;

  double value(const std::vector<Point>& z) const;
  std::vector<Point> gradient(const std::vector<Point>& z) const;
  ProductField product() const;
};

/// Throws InputError for n < 2 or c <= 0.
PolydiskField polydisk_extend(const HamiltonianField& k, std::size_t n, double eta_eps = 1.0, double c = 1.0);

struct SliceReport {
  std::size_t n = 0;
  std::size_t points = 0;
  double value_gap = 0.0;            // max |h(z,0..0) - k(z)|
  double gradient_gap = 0.0;         // max |d_1 h - dk| on the slice
  double transverse_gradient = 0.0;  // max |d_j h|, j >= 2, on the slice
  double flow_gap = 0.0;             // max |first factor of the h-flow - k-flow|
  double transverse_drift = 0.0;     // max |z_j(T)|, j >= 2
  double T = 0.0;

  nlohmann::json to_json() const;
};

/// Gradient identities at every slice point; flows of the first `flow_points`
/// of them for time T under h and under k.
SliceReport polydisk_slice_check(const PolydiskField& h, const std::vector<Point>& slice_points,
                                 double T, std::size_t steps, std::size_t flow_points);

}  // namespace raagham::dyn
