#include "raagham/twist.hpp"

#include <algorithm>
#include <cmath>

#include "raagham/errors.hpp"

namespace raagham {

PlaneMap identity_map() {
  return {[](Point z) { return z; }, [](Point z) { return z; }, [](Point) { return false; }};
}

PlaneMap compose(const PlaneMap& outer, const PlaneMap& inner) {
  return {[outer, inner](Point z) { return outer.forward(inner.forward(z)); },
          [outer, inner](Point z) { return inner.inverse(outer.inverse(z)); },
          [outer, inner](Point z) { return outer.in_support(z) || inner.in_support(z); }};
}

PlaneMap inverse(const PlaneMap& m) { return {m.inverse, m.forward, m.in_support}; }

}  // namespace raagham

namespace raagham::twist {

namespace {
constexpr double kE = 2.718281828459045235360287;

}  // namespace

TwistProfile::TwistProfile(double a, double b) : a_(a), b_(b) {
  if (!(a > 0) || !(b > -a && b < a)) {
    throw InputError("twist profile needs a > 0 and -a < b < a");
  }
  w_ = std::min(a - b, a + b);
}

double TwistProfile::h(double t) const {
  const double u = t - b_, x = u / w_;
  if (std::abs(x) >= 1) return 0.0;
  return 2 * kPi * kE * u * std::exp(-1.0 / (1.0 - x * x));
}

double TwistProfile::dh(double t) const { return profile_slope(*this, t); }

double TwistProfile::d2h(double t) const {
  const double x = (t - b_) / w_;
  if (std::abs(x) >= 1) return 0.0;
  const double q = 1.0 - x * x;
  const double g = 1.0 - 2.0 * x * x / (q * q);
  const double dphi = -2.0 * x / (w_ * q * q);
  const double dg = -4.0 * x * (1.0 + x * x) / (w_ * q * q * q);
  return 2 * kPi * kE * std::exp(-1.0 / q) * (dphi * g + dg);
}

TwistProfile make_profile(double a, double b) { return TwistProfile(a, b); }

ProductPoint product_twist(const TwistProfile& p, double tau, ProductPoint x, bool lifted) {
  const double a = p.half_width();
  if (x.t < -a || x.t > a) throw InputError("product twist: t outside [-a, a]");
  const double s = x.s + tau * p.dh(x.t);
  return {lifted ? s : wrap_angle(s), x.t};
}

double RoundAnnulus::central_radius() const {
  return std::sqrt((r_inner * r_inner + r_outer * r_outer) / 2.0);
}

bool RoundAnnulus::contains(Point p) const {
  const double r2 = std::norm(p - center);
  return r2 > r_inner * r_inner && r2 < r_outer * r_outer;
}

bool RoundAnnulus::contains_closed(Point p) const {
  const double r2 = std::norm(p - center);
  return r2 >= r_inner * r_inner && r2 <= r_outer * r_outer;
}

RoundAnnulus annulus_around(Point center, double radius, double width) {
  if (!(width > 0) || !(2 * width < radius)) {
    throw InputError("annulus width must lie in (0, radius/2)");
  }
  return {center, std::sqrt(radius * radius - 2 * radius * width),
          std::sqrt(radius * radius + 2 * radius * width)};
}

AreaChart::AreaChart(const RoundAnnulus& a)
    : annulus_(a),
      m_((a.r_inner * a.r_inner + a.r_outer * a.r_outer) / 2.0),
      a_((a.r_outer * a.r_outer - a.r_inner * a.r_inner) / 4.0) {
  if (!(a.r_inner >= 0) || !(a.r_inner < a.r_outer)) {
    throw InputError("annulus needs 0 <= r_inner < r_outer");
  }
}

ProductPoint AreaChart::to_product(Point p) const {
  const Point d = p - annulus_.center;
  return {wrap_angle(-std::arg(d)), height(p)};
}

Point AreaChart::from_product(ProductPoint q) const {
  const double r = std::sqrt(std::max(0.0, 2.0 * q.t + m_));
  return annulus_.center + std::polar(r, -q.s);
}

double twist_angle(const TwistProfile& p, double tau, double t, TwistPart part) {
  if (part == TwistPart::Plus && t < p.center()) return 0.0;
  if (part == TwistPart::Minus && t >= p.center()) return 0.0;
  // s = -theta, so advancing s by tau h'(t) rotates by -tau h'(t).
  return -tau * p.dh(t);
}

PlaneMap double_dehn_twist(const RoundAnnulus& a, const TwistProfile& p, double tau,
                           TwistPart part) {
  const AreaChart chart(a);
  auto apply = [chart, p, part, a](Point z, double sign_tau) {
    if (!a.contains(z)) return z;
    const double angle = twist_angle(p, sign_tau, chart.height(z), part);
    if (angle == 0.0) return z;
    return rotate_about(z, a.center, angle);
  };
  return {[apply, tau](Point z) { return apply(z, tau); },
          [apply, tau](Point z) { return apply(z, -tau); },
          [a](Point z) { return a.contains(z); }};
}

HamiltonianField twist_hamiltonian(const RoundAnnulus& a, const TwistProfile& p) {
  const AreaChart chart(a);
  HamiltonianField f;
  f.value = [chart, p, a](Point z) { return a.contains(z) ? p.h(chart.height(z)) : 0.0; };
  f.gradient = [chart, p, a](Point z) {
    if (!a.contains(z)) return Point(0, 0);
    return p.dh(chart.height(z)) * (z - a.center);
  };
  f.support_radius = std::abs(a.center) + a.r_outer;
  return f;
}

TwistProfile standard_profile(const RoundAnnulus& a) {
  return TwistProfile(AreaChart(a).half_width(), 0.0);
}

}  // namespace raagham::twist
