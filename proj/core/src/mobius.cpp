#include "raagham/mobius.hpp"

#include <cmath>

#include "raagham/errors.hpp"

namespace raagham::hyper {

MobiusMap::MobiusMap(double theta, Point a) {
  if (!(std::abs(a) < 1.0)) throw InputError("Mobius map needs |a| < 1");
  const double s = std::sqrt(1.0 - std::norm(a));
  const Point half = std::polar(1.0, theta / 2.0);
  alpha_ = half / s;
  beta_ = -half * a / s;
}

MobiusMap MobiusMap::from_su11(Point alpha, Point beta) {
  const double det = std::norm(alpha) - std::norm(beta);
  if (!(det > 0)) throw InputError("SU(1,1) matrix needs |alpha| > |beta|");
  const double s = std::sqrt(det);
  return from_raw(alpha / s, beta / s);
}

double MobiusMap::theta() const { return wrap_angle(2.0 * std::arg(alpha_)); }

Point MobiusMap::a() const { return -beta_ / alpha_; }

Point MobiusMap::pole() const {
  if (beta_ == Point(0, 0)) return {INFINITY, INFINITY};
  return -std::conj(alpha_) / std::conj(beta_);
}

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
  // [[a1, b1], [b1*, a1*]] [[a2, b2], [b2*, a2*]]
  const Point alpha = f.alpha_ * g.alpha_ + f.beta_ * std::conj(g.beta_);
  const Point beta = f.alpha_ * g.beta_ + f.beta_ * std::conj(g.alpha_);
  return MobiusMap::from_raw(alpha, beta);
}

MobiusValue mobius_eval(const MobiusMap& m, Point z) { return {m(z), m.derivative(z)}; }

Circle image_circle(const MobiusMap& m, Point c, double r) {
  // Three image points determine the circle.
  const Point p1 = m(c + r), p2 = m(c + Point(0, r)), p3 = m(c - r);
  const Point a = p2 - p1, b = p3 - p1;
  const double d = 2.0 * cross(a, b);
  if (d == 0.0) throw ConstructionError("circle maps to a line");
  const Point center =
      p1 + Point(b.imag() * std::norm(a) - a.imag() * std::norm(b),
                 a.real() * std::norm(b) - b.real() * std::norm(a)) / d;
  return {center, std::abs(p1 - center)};
}

std::vector<MobiusMap> schottky_generators(double p, double q) {
  const MobiusMap A = MobiusMap::from_su11(p, q);
  const MobiusMap quarter(kPi / 2.0, 0.0);
  return {A, quarter * A * quarter.inverse()};
}

std::vector<MobiusMap> octagon_generators() {
  const double alpha = 1.0 + std::sqrt(2.0);
  const MobiusMap T = MobiusMap::from_su11(alpha, std::sqrt(alpha * alpha - 1.0));
  std::vector<MobiusMap> gens;
  for (int k = 0; k < 4; ++k) {
    const MobiusMap rot(k * kPi / 4.0, 0.0);
    gens.push_back(rot * T * rot.inverse());
  }
  return gens;
}

std::string GroupElement::label(std::size_t m) const {
  if (word.empty()) return "e";
  std::string s;
  for (int x : word) {
    const auto i = static_cast<std::size_t>(x);
    s += i < m ? static_cast<char>('a' + i) : static_cast<char>('A' + (i - m));
  }
  return s;
}

std::vector<GroupElement> enumerate_group(const std::vector<MobiusMap>& gens, std::size_t L) {
  const int m = static_cast<int>(gens.size());
  std::vector<MobiusMap> letters = gens;
  for (const auto& g : gens) letters.push_back(g.inverse());
  std::vector<GroupElement> out{GroupElement{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= L; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int x = 0; x < 2 * m; ++x) {
        if (!out[i].word.empty()) {
          const int last = out[i].word.back();
          if (x == (last < m ? last + m : last - m)) continue;
        }
        GroupElement e{out[i].map * letters[static_cast<std::size_t>(x)], out[i].word};
        e.word.push_back(x);
        out.push_back(std::move(e));
      }
    }
    begin = end;
  }
  return out;
}

std::size_t free_group_count(std::size_t m, std::size_t L) {
  std::size_t total = 1, layer = 2 * m;
  for (std::size_t k = 1; k <= L; ++k) {
    total += layer;
    layer *= 2 * m - 1;
  }
  return m == 0 ? 1 : total;
}

}  // namespace raagham::hyper
