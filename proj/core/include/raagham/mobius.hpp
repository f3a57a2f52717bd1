#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "raagham/geometry.hpp"

namespace raagham::hyper {

/// Disk automorphism sigma(z) = e^{i theta} (z - a)/(1 - conj(a) z), stored as
/// the SU(1,1) matrix [[alpha, beta], [conj(beta), conj(alpha)]] with
/// |alpha|^2 - |beta|^2 = 1, so sigma(z) = (alpha z + beta)/(conj(beta) z + conj(alpha))
/// and sigma'(z) = 1/(conj(beta) z + conj(alpha))^2.
class MobiusMap {
 public:
  MobiusMap() = default;  // identity
  /// Throws InputError unless |a| < 1.
  MobiusMap(double theta, Point a);
  /// Rescales (alpha, beta) onto |alpha|^2 - |beta|^2 = 1; throws InputError
  /// when the determinant is not positive.
  static MobiusMap from_su11(Point alpha, Point beta);

  double theta() const;
  Point a() const;
  Point alpha() const { return alpha_; }
  Point beta() const { return beta_; }

  Point operator()(Point z) const { return (alpha_ * z + beta_) / (std::conj(beta_) * z + std::conj(alpha_)); }
  Point derivative(Point z) const {
    const Point d = std::conj(beta_) * z + std::conj(alpha_);
    return 1.0 / (d * d);
  }
  /// Pole of the map (outside the closed disk); infinity for rotations.
  Point pole() const;
  MobiusMap inverse() const { return from_raw(std::conj(alpha_), -beta_); }

  /// Composition f * g = f o g (matrix product).
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);

 private:
  static MobiusMap from_raw(Point alpha, Point beta) {
    MobiusMap m;
    m.alpha_ = alpha;
    m.beta_ = beta;
    return m;
  }
  Point alpha_{1.0, 0.0};
  Point beta_{0.0, 0.0};
};

struct MobiusValue {
  Point image;
  Point derivative;
};
MobiusValue mobius_eval(const MobiusMap& m, Point z);

/// Image of the circle |z - c| = r (the circle must avoid the pole).
struct Circle {
  Point center;
  double radius;
};
Circle image_circle(const MobiusMap& m, Point c, double r);

/// Hyperbolic pair A: (alpha, beta) = (p, q) with p^2 - q^2 = 1, and B = its
/// conjugate by the quarter turn. For p = 2, q = sqrt 3 the four isometric
/// circles are disjoint, so <A, B> is a rank-2 Schottky group whose
/// fundamental domain contains |z| < 1/sqrt 3.
std::vector<MobiusMap> schottky_generators(double p = 2.0, double q = 1.7320508075688772);

/// Side pairings of the regular hyperbolic octagon with angles pi/4 (genus 2
/// surface group). Enumeration treats them as free generators, so distinct
/// words may give the same element; translate disjointness is not guaranteed.
std::vector<MobiusMap> octagon_generators();

/// Reduced word over generators 0..m-1 (letter i) and inverses (letter m+i).
struct GroupElement {
  MobiusMap map;
  std::vector<int> word;

  std::size_t length() const { return word.size(); }
  /// "e" for the identity; a, b, ... for generators, A, B, ... for inverses.
  std::string label(std::size_t generator_count) const;
};

/// Every freely reduced word of length <= L with its product (the map of
/// x1 x2 ... xk is g_x1 o ... o g_xk). Ordered by length, then lexicographically.
std::vector<GroupElement> enumerate_group(const std::vector<MobiusMap>& generators, std::size_t L);

/// 1 + sum_{k=1..L} 2m (2m-1)^{k-1}.
std::size_t free_group_count(std::size_t m, std::size_t L);

}  // namespace raagham::hyper
