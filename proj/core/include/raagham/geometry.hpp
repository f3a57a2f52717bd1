#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace raagham {

// Points of the plane (and of the unit disk) are complex numbers throughout.
using Point = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Point a, Point b) { return a.real() * b.real() + a.imag() * b.imag(); }

// Sign of the turn a -> b -> c.
inline int orientation(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  return (v > 0) - (v < 0);
}

inline double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

// Rotation about `center` by `angle` (counterclockwise for positive angle).
inline Point rotate_about(Point p, Point center, double angle) {
  return center + (p - center) * std::polar(1.0, angle);
}

}  // namespace raagham
