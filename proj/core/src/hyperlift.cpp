#include "raagham/hyperlift.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "raagham/errors.hpp"
#include "raagham/parallel.hpp"
#include "raagham/quadrature.hpp"

namespace raagham::hyper {

namespace {

double denominator_norm(const MobiusMap& s, Point c) {
  return std::norm(std::conj(s.beta()) * c + std::conj(s.alpha()));
}

double sup_profile(const TwistProfile& p) {
  // |h| peaks strictly inside the bump; refine a coarse scan by golden section.
  const double b = p.center(), w = p.bump_width();
  auto f = [&](double x) { return std::abs(p.h(b + w * x)); };
  double best = 0.0, arg = 0.5;
  for (int i = 1; i < 1000; ++i) {
    const double x = i / 1000.0;
    if (f(x) > best) best = f(x), arg = x;
  }
  double lo = arg - 1e-3, hi = arg + 1e-3;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 80; ++it) {
    const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
    if (f(m1) < f(m2)) lo = m1; else hi = m2;
  }
  return std::max(best, f((lo + hi) / 2));
}

}  // namespace

double disk_energy(const MobiusMap& s, Point c, double R) {
  const double d = denominator_norm(s, c) - std::norm(s.beta()) * R * R;
  if (!(d > 0)) throw InputError("disk meets the pole of the Mobius map");
  return kPi * R * R / (d * d);
}

double lambda_scale(const MobiusMap& s, const RoundAnnulus& A, double tol) {
  auto f = [&](double r, double phi) { return std::norm(s.derivative(A.center + std::polar(r, phi))) * r; };
  return numeric::integrate_2d(f, A.r_inner, A.r_outer, 0.0, kTwoPi, tol).value;
}

double lambda_scale_exact(const MobiusMap& s, const RoundAnnulus& A) {
  return disk_energy(s, A.center, A.r_outer) - disk_energy(s, A.center, A.r_inner);
}

TransportChart::TransportChart(const RoundAnnulus& A, const MobiusMap& sigma, double lambda2)
    : annulus_(A), sigma_(sigma), lambda2_(lambda2) {
  if (!(lambda2 > 0)) throw InputError("lambda^2 must be positive");
  inner_energy_ = disk_energy(sigma, A.center, A.r_inner);
  b_ = height_at_radius(A.central_radius());
}

double TransportChart::radial_energy(double r) const {
  const double d0 = denominator_norm(sigma_, annulus_.center), B = std::norm(sigma_.beta());
  const double q = d0 - B * r * r;
  return kTwoPi * (d0 + B * r * r) / (q * q * q);
}

double TransportChart::density(Point w) const { return std::norm(sigma_.derivative(w)) / lambda2_; }

double TransportChart::height_at_radius(double r) const {
  return (disk_energy(sigma_, annulus_.center, r) - inner_energy_) / lambda2_ - 0.5;
}

double TransportChart::height(Point w) const { return height_at_radius(std::abs(w - annulus_.center)); }

Point TransportChart::height_gradient(Point w) const {
  // dt/dr = r E(r) / lambda^2 and grad r = (w - c)/r.
  const double r = std::abs(w - annulus_.center);
  return (radial_energy(r) / lambda2_) * (w - annulus_.center);
}

double TransportChart::angle(Point w) const {
  const Point d = w - annulus_.center;
  const double r = std::abs(d), phi = wrap_angle(std::arg(d));
  auto f = [&](double x) { return std::norm(sigma_.derivative(annulus_.center + std::polar(r, x))); };
  using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
  const double part = GK::integrate(f, 0.0, phi, 12, 1e-13);
  return -kTwoPi * part / radial_energy(r);
}

CorrectedHamiltonian::CorrectedHamiltonian(GroupElement sigma, const RoundAnnulus& A, double tol)
    : sigma_(std::move(sigma)),
      inverse_(sigma_.map.inverse()),
      annulus_(A),
      chart_(A, sigma_.map, lambda_scale(sigma_.map, A, tol)),
      profile_(0.5, chart_.central_height()),
      outer_(image_circle(sigma_.map, A.center, A.r_outer)),
      inner_(image_circle(sigma_.map, A.center, A.r_inner)),
      sup_hat_(sup_profile(profile_)) {}

bool CorrectedHamiltonian::in_region(Point z) const {
  if (std::norm(z - outer_.center) >= outer_.radius * outer_.radius) return false;
  return annulus_.contains(inverse_(z));
}

double CorrectedHamiltonian::value(Point z) const {
  if (std::norm(z - outer_.center) >= outer_.radius * outer_.radius) return 0.0;
  const Point w = inverse_(z);
  if (!annulus_.contains(w)) return 0.0;
  return lambda2() / kTwoPi * profile_.h(chart_.height(w));
}

Point CorrectedHamiltonian::gradient(Point z) const {
  if (std::norm(z - outer_.center) >= outer_.radius * outer_.radius) return {0, 0};
  const Point w = inverse_(z);
  if (!annulus_.contains(w)) return {0, 0};
  // grad (f o g) = (grad f)(g) conj(g') for holomorphic g = sigma^{-1}.
  const Point inner = chart_.height_gradient(w) * profile_.dh(chart_.height(w));
  return lambda2() / kTwoPi * inner * std::conj(inverse_.derivative(z));
}

Point CorrectedHamiltonian::central_point(double phi) const {
  return sigma_.map(annulus_.center + std::polar(annulus_.central_radius(), phi));
}

AssembledHamiltonian::AssembledHamiltonian(std::size_t vertex, const RoundAnnulus& A,
                                           std::vector<CorrectedHamiltonian> parts)
    : vertex_(vertex), annulus_(A), parts_(std::move(parts)), cells_(kCells * kCells) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (std::size_t j = i + 1; j < parts_.size(); ++j) {
      const auto& a = parts_[i].outer_disk();
      const auto& b = parts_[j].outer_disk();
      if (std::abs(a.center - b.center) < a.radius + b.radius) {
        throw ConstructionError("translated regions " + std::to_string(i) + " and " +
                                std::to_string(j) + " overlap");
      }
    }
  }
  auto cell = [](double x) {
    return std::clamp(static_cast<int>(std::floor((x + 1.0) / 2.0 * kCells)), 0, kCells - 1);
  };
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& d = parts_[i].outer_disk();
    for (int ix = cell(d.center.real() - d.radius); ix <= cell(d.center.real() + d.radius); ++ix) {
      for (int iy = cell(d.center.imag() - d.radius); iy <= cell(d.center.imag() + d.radius); ++iy) {
        cells_[static_cast<std::size_t>(ix * kCells + iy)].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
}

const CorrectedHamiltonian* AssembledHamiltonian::locate(Point z) const {
  if (!(std::norm(z) < 1.0)) return nullptr;
  const int ix = std::clamp(static_cast<int>(std::floor((z.real() + 1.0) / 2.0 * kCells)), 0, kCells - 1);
  const int iy = std::clamp(static_cast<int>(std::floor((z.imag() + 1.0) / 2.0 * kCells)), 0, kCells - 1);
  for (std::uint32_t i : cells_[static_cast<std::size_t>(ix * kCells + iy)]) {
    if (parts_[i].in_region(z)) return &parts_[i];
  }
  return nullptr;
}

double AssembledHamiltonian::value(Point z) const {
  const auto* p = locate(z);
  return p ? p->value(z) : 0.0;
}

Point AssembledHamiltonian::gradient(Point z) const {
  const auto* p = locate(z);
  return p ? p->gradient(z) : Point(0, 0);
}

HamiltonianField AssembledHamiltonian::field() const {
  HamiltonianField f;
  f.value = [this](Point z) { return value(z); };
  f.gradient = [this](Point z) { return gradient(z); };
  f.support_radius = 1.0;
  return f;
}

double AssembledHamiltonian::boundary_sup(std::size_t samples) const {
  double sup = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double th = kTwoPi * (k + 0.5) / samples;
    for (double r : {1.0 - 1e-3, 1.0 - 5e-4, 1.0 - 1e-4, 1.0}) sup = std::max(sup, std::abs(value(std::polar(r, th))));
  }
  return sup;
}

AssembledHamiltonian assemble_Hv(std::size_t v, const std::vector<GroupElement>& elements,
                                 const RoundAnnulus& A, double tol) {
  std::vector<std::unique_ptr<CorrectedHamiltonian>> built(elements.size());
  parallel_for(elements.size(), [&](std::size_t i) {
    built[i] = std::make_unique<CorrectedHamiltonian>(elements[i], A, tol);
  });
  std::vector<CorrectedHamiltonian> parts;
  parts.reserve(built.size());
  for (auto& p : built) parts.push_back(std::move(*p));
  return AssembledHamiltonian(v, A, std::move(parts));
}

double mollifier(double eps, Point z) {
  const double r = std::abs(z);
  if (r >= 1.0) return 0.0;
  const double t = std::tan(kPi * r / 2.0);
  return std::exp(-eps * t * t);
}

Point mollifier_gradient(double eps, Point z) {
  const double r = std::abs(z);
  if (r >= 1.0 || r == 0.0) return {0, 0};
  const double t = std::tan(kPi * r / 2.0);
  const double deta = -eps * 2.0 * t * (1.0 + t * t) * (kPi / 2.0) * std::exp(-eps * t * t);
  return deta * z / r;
}

HamiltonianField smooth_Hv(std::shared_ptr<const AssembledHamiltonian> H, double eps) {
  if (!(eps > 0)) throw InputError("mollifier needs eps > 0");
  HamiltonianField f;
  f.value = [H, eps](Point z) { return mollifier(eps, z) * H->value(z); };
  f.gradient = [H, eps](Point z) {
    const auto* p = H->locate(z);
    if (!p) return Point(0, 0);
    return mollifier(eps, z) * p->gradient(z) + p->value(z) * mollifier_gradient(eps, z);
  };
  f.support_radius = 1.0;
  return f;
}

RoundAnnulus default_lift_annulus() { return {{0.04, 0.03}, 0.18, 0.42}; }

namespace {

double directional(const AssembledHamiltonian& H, Point z, Point e, double h, int n) {
  auto f = [&](double k) { return H.value(z + k * h * e); };
  switch (n) {
    case 1: return (f(1) - f(-1)) / (2 * h);
    case 2: return (f(1) - 2 * f(0) + f(-1)) / (h * h);
    default: return (f(2) - 2 * f(1) + 2 * f(-1) - f(-2)) / (2 * h * h * h);
  }
}

double regression_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i], sy += y[i], sxx += x[i] * x[i], sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

EstimateReport analytic_report(const AssembledHamiltonian& H, std::size_t samples_per_region) {
  const auto& parts = H.parts();
  std::size_t depth = 0;
  for (const auto& p : parts) depth = std::max(depth, p.element().length());
  if (depth < 4) throw InputError("analytic report needs enumeration depth >= 4");

  struct PartStats {
    double min_r = 1.0;
    std::array<double, 3> sup{};
  };
  std::vector<PartStats> stats(parts.size());
  const auto& A = H.annulus();
  const std::size_t radii = 5, angles = std::max<std::size_t>(1, samples_per_region / radii);
  const std::array<Point, 4> dirs{Point(1, 0), Point(0, 1), Point(M_SQRT1_2, M_SQRT1_2),
                                  Point(M_SQRT1_2, -M_SQRT1_2)};
  parallel_for(parts.size(), [&](std::size_t i) {
    PartStats s;
    for (std::size_t a = 0; a < radii; ++a) {
      const double r2 = A.r_inner * A.r_inner +
                        (A.r_outer * A.r_outer - A.r_inner * A.r_inner) * (a + 0.5) / radii;
      for (std::size_t k = 0; k < angles; ++k) {
        const Point w = A.center + std::polar(std::sqrt(r2), kTwoPi * (k + 0.25) / angles);
        const Point z = parts[i].element().map(w);
        const double r = 1.0 - std::abs(z);
        s.min_r = std::min(s.min_r, r);
        for (int n = 1; n <= 3; ++n) {
          for (const Point& e : dirs) {
            s.sup[n - 1] = std::max(s.sup[n - 1], std::abs(directional(H, z, e, 1e-3 * r, n)));
          }
        }
      }
    }
    stats[i] = s;
  });

  EstimateReport rep;
  rep.rows.resize(depth + 1);
  for (std::size_t L = 0; L <= depth; ++L) rep.rows[L].length = L;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto& row = rep.rows[parts[i].element().length()];
    row.count += 1;
    row.max_lambda2 = std::max(row.max_lambda2, parts[i].lambda2());
    row.sup_H = std::max(row.sup_H, parts[i].sup_value());
    row.max_diameter = std::max(row.max_diameter, parts[i].diameter());
    row.min_r = std::min(row.min_r, stats[i].min_r);
    for (int n = 0; n < 3; ++n) row.sup_derivative[n] = std::max(row.sup_derivative[n], stats[i].sup[n]);
  }

  std::vector<double> x;
  std::array<std::vector<double>, 3> y;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].element().length() < 2) continue;
    x.push_back(std::log(1.0 / stats[i].min_r));
    for (int n = 0; n < 3; ++n) y[n].push_back(std::log(stats[i].sup[n]));
  }
  if (x.size() < 3) throw InputError("not enough translates for the regression");
  rep.regression_points = x.size();
  for (int n = 0; n < 3; ++n) {
    rep.slopes[n] = regression_slope(x, y[n]);
    rep.slope_limits[n] = std::max(0, n + 1 - 2) + 0.3;
    rep.slope_ok[n] = rep.slopes[n] <= rep.slope_limits[n];
  }
  rep.lambda_decreasing = true;
  for (std::size_t L = 3; L <= depth; ++L) {
    rep.lambda_decreasing = rep.lambda_decreasing && rep.rows[L].max_lambda2 < rep.rows[L - 1].max_lambda2;
  }
  rep.lambda_ratio = rep.rows[depth].max_lambda2 / rep.rows[1].max_lambda2;
  rep.first_derivative_vanishes = rep.rows[depth].sup_derivative[0] < 1e-2 * rep.rows[1].sup_derivative[0];
  double d2max = 0.0;
  for (std::size_t L = 1; L <= depth; ++L) d2max = std::max(d2max, rep.rows[L].sup_derivative[1]);
  rep.second_derivative_bounded = d2max <= 10.0 * std::max(rep.rows[0].sup_derivative[1], rep.rows[1].sup_derivative[1]);
  rep.boundary_sup = H.boundary_sup();
  return rep;
}

nlohmann::json EstimateReport::to_json() const {
  nlohmann::json j;
  for (const auto& r : rows) {
    j["rows"].push_back({{"word_length", r.length},
                         {"count", r.count},
                         {"max_lambda2", r.max_lambda2},
                         {"sup_H", r.sup_H},
                         {"max_diameter", r.max_diameter},
                         {"min_r", r.min_r},
                         {"sup_derivative", r.sup_derivative}});
  }
  for (int n = 0; n < 3; ++n) {
    j["slopes"].push_back({{"n", n + 1}, {"slope", slopes[n]}, {"limit", slope_limits[n]}, {"ok", slope_ok[n]}});
  }
  j["regression_points"] = regression_points;
  j["lambda_decreasing"] = lambda_decreasing;
  j["lambda_ratio"] = lambda_ratio;
  j["first_derivative_vanishes"] = first_derivative_vanishes;
  j["second_derivative_bounded"] = second_derivative_bounded;
  j["boundary_sup"] = boundary_sup;
  return j;
}

std::string EstimateReport::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "word_length,count,max_lambda2,sup_H,max_diameter,sup_d1,sup_d2,sup_d3\n";
  for (const auto& r : rows) {
    out << r.length << "," << r.count << "," << r.max_lambda2 << "," << r.sup_H << ","
        << r.max_diameter << "," << r.sup_derivative[0] << "," << r.sup_derivative[1] << ","
        << r.sup_derivative[2] << "\n";
  }
  return out.str();
}

}  // namespace raagham::hyper
