#pragma once

#include "raagham/field.hpp"
#include "raagham/geometry.hpp"

namespace raagham::twist {

/// Flat bump profile on [-a, a] centred at b:
///   h(t) = 2 pi e u exp(-1/(1 - (u/w)^2)),  u = t - b,  w = min(a - b, a + b),
/// zero for |u| >= w. h'(b) = 2 pi and h is flat at b +- w.
class TwistProfile {
 public:
  TwistProfile() = default;
  /// Throws InputError unless a > 0 and -a < b < a.
  TwistProfile(double a, double b);

  double half_width() const { return a_; }
  double center() const { return b_; }
  double bump_width() const { return w_; }

  double h(double t) const;
  double dh(double t) const;
  double d2h(double t) const;

 private:
  double a_ = 0.5;
  double b_ = 0.0;
  double w_ = 0.5;
};

TwistProfile make_profile(double a, double b);

/// h'(t) in any floating type; extended-precision probes instantiate it.
template <class T>
T profile_slope(const TwistProfile& p, T t) {
  using std::abs;
  using std::exp;
  const T x = (t - T(p.center())) / T(p.bump_width());
  if (abs(x) >= 1) return T(0);
  const T q = 1 - x * x;
  return T(2) * T(kPi) * T(2.718281828459045235360287) * exp(-1 / q) * (1 - 2 * x * x / (q * q));
}

/// Product twist on S^1 x [-a, a]: (s, t) -> (s + tau h'(t) mod 2 pi, t).
/// `lifted` keeps s unreduced. Throws InputError for t outside [-a, a].
struct ProductPoint {
  double s;
  double t;
};
ProductPoint product_twist(const TwistProfile& p, double tau, ProductPoint x, bool lifted = false);

struct RoundAnnulus {
  Point center;
  double r_inner = 0.0;
  double r_outer = 0.0;

  double area() const { return kPi * (r_outer * r_outer - r_inner * r_inner); }
  double central_radius() const;  // radius of the level t = 0
  /// Open annulus membership using the squared radius.
  bool contains(Point p) const;
  bool contains_closed(Point p) const;
};

/// Annulus with central circle of radius R whose chart half width is R w:
/// r^2 ranges over R^2 -+ 2 R w.
RoundAnnulus annulus_around(Point center, double radius, double width);

/// Explicit area chart A -> S^1 x [-a, a]:
///   s = -theta,  t = (r^2 - m)/2,  m = (r_in^2 + r_out^2)/2,  a = (r_out^2 - r_in^2)/4.
/// ds ^ dt equals dx ^ dy.
class AreaChart {
 public:
  explicit AreaChart(const RoundAnnulus& a);

  double half_width() const { return a_; }
  ProductPoint to_product(Point p) const;
  Point from_product(ProductPoint q) const;
  double height(Point p) const { return (std::norm(p - annulus_.center) - m_) / 2.0; }
  double height_from_r2(double r2) const { return (r2 - m_) / 2.0; }
  const RoundAnnulus& annulus() const { return annulus_; }

 private:
  RoundAnnulus annulus_;
  double m_;
  double a_;
};

/// Which part of the double twist to realise.
enum class TwistPart { Full, Plus, Minus };

/// Signed rotation angle (about the annulus centre) that the time-tau twist
/// applies to a point at chart height t. Plus acts on t >= b, Minus on t < b.
double twist_angle(const TwistProfile& p, double tau, double t, TwistPart part = TwistPart::Full);

/// Closed-form double Dehn twist (or one of its halves) as a PlaneMap.
PlaneMap double_dehn_twist(const RoundAnnulus& a, const TwistProfile& p, double tau,
                           TwistPart part = TwistPart::Full);

/// Hamiltonian H = h(t(z)) on the annulus, zero elsewhere. Its time-tau flow
/// is double_dehn_twist(a, p, tau).
HamiltonianField twist_hamiltonian(const RoundAnnulus& a, const TwistProfile& p);

/// Profile centred at 0 matching the annulus chart.
TwistProfile standard_profile(const RoundAnnulus& a);

}  // namespace raagham::twist
