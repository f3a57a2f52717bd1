#pragma once

#include <functional>

#include "raagham/geometry.hpp"

namespace raagham {

/// Autonomous Hamiltonian on the plane with its Euclidean gradient. The
/// vector field is X_H = (dH/dy, -dH/dx).
struct HamiltonianField {
  std::function<double(Point)> value;
  std::function<Point(Point)> gradient;  // (dH/dx, dH/dy) packed as x + iy
  double support_radius = 0.0;           // H vanishes for |z| > support_radius (0: unknown)
};

inline Point hamiltonian_vector(const HamiltonianField& f, Point z) {
  const Point g = f.gradient(z);
  return {g.imag(), -g.real()};
}

/// Invertible map of the plane.
struct PlaneMap {
  std::function<Point(Point)> forward;
  std::function<Point(Point)> inverse;
  std::function<bool(Point)> in_support;  // the map is the identity off this set
};

PlaneMap identity_map();
PlaneMap compose(const PlaneMap& outer, const PlaneMap& inner);
PlaneMap inverse(const PlaneMap& m);

}  // namespace raagham
