#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "raagham/field.hpp"
#include "raagham/mobius.hpp"
#include "raagham/twist.hpp"

namespace raagham::hyper {

using twist::RoundAnnulus;
using twist::TwistProfile;

/// int_{|z - c| < R} |sigma'(z)|^2 dA in closed form:
///   pi R^2 / (|conj(beta) c + conj(alpha)|^2 - |beta|^2 R^2)^2.
double disk_energy(const MobiusMap& sigma, Point c, double R);

/// lambda^2 = int_A |sigma'|^2 dA by adaptive 2D Gauss quadrature.
double lambda_scale(const MobiusMap& sigma, const RoundAnnulus& A, double tol = 1e-8);
/// Closed-form oracle for lambda_scale.
double lambda_scale_exact(const MobiusMap& sigma, const RoundAnnulus& A);

/// Measure-preserving chart (A, 2 pi rho dA) -> S^1 x [-1/2, 1/2] with
/// rho = |sigma'|^2 / lambda^2 (unit mass). Triangular in the order radius
/// then angle: t is the rho-mass inside radius r minus 1/2, so every circle
/// about the annulus centre is a level set; s = -2 pi times the conditional
/// angular distribution at that radius.
class TransportChart {
 public:
  TransportChart(const RoundAnnulus& A, const MobiusMap& sigma, double lambda2);

  double lambda2() const { return lambda2_; }
  /// Height of the central circle C_v.
  double central_height() const { return b_; }
  const RoundAnnulus& annulus() const { return annulus_; }

  double density(Point w) const;                // rho(w)
  double height(Point w) const;                 // t
  double height_at_radius(double r) const;
  Point height_gradient(Point w) const;         // grad_w t
  double angle(Point w) const;                  // s in (-2 pi, 0]
  twist::ProductPoint to_product(Point w) const { return {angle(w), height(w)}; }

 private:
  double radial_energy(double r) const;  // int_0^{2 pi} |sigma'(c + r e^{i phi})|^2 dphi
  RoundAnnulus annulus_;
  MobiusMap sigma_;
  double lambda2_;
  double inner_energy_;  // disk_energy at r_inner
  double b_;
};

/// H_{v,sigma}(z) = (lambda^2 / 2 pi) h_b(t(sigma^{-1} z)) on sigma(A), zero
/// elsewhere. The 1/2 pi accounts for the product annulus having ds^dt-area
/// 2 pi; with it the time-1 flow turns sigma(C_v) exactly once.
class CorrectedHamiltonian {
 public:
  CorrectedHamiltonian(GroupElement sigma, const RoundAnnulus& A, double tol = 1e-8);

  const GroupElement& element() const { return sigma_; }
  const TransportChart& chart() const { return chart_; }
  const TwistProfile& profile() const { return profile_; }
  double lambda2() const { return chart_.lambda2(); }
  /// Outer boundary of sigma(A); contains the whole region.
  const Circle& outer_disk() const { return outer_; }
  const Circle& inner_disk() const { return inner_; }
  double diameter() const { return 2.0 * outer_.radius; }

  bool in_region(Point z) const;
  double value(Point z) const;
  Point gradient(Point z) const;
  /// sup |h_b| over [-1/2, 1/2].
  double sup_hat() const { return sup_hat_; }
  double sup_value() const { return lambda2() / kTwoPi * sup_hat_; }
  /// Image of the central circle point at angle phi.
  Point central_point(double phi) const;

 private:
  GroupElement sigma_;
  MobiusMap inverse_;
  RoundAnnulus annulus_;
  TransportChart chart_;
  TwistProfile profile_;
  Circle outer_, inner_;
  double sup_hat_;
};

/// H_v on the closed disk: H_{v,sigma} on each sigma(A), zero elsewhere.
class AssembledHamiltonian {
 public:
  /// Throws ConstructionError when two translated regions overlap.
  AssembledHamiltonian(std::size_t vertex, const RoundAnnulus& A,
                       std::vector<CorrectedHamiltonian> parts);

  std::size_t vertex() const { return vertex_; }
  const RoundAnnulus& annulus() const { return annulus_; }
  const std::vector<CorrectedHamiltonian>& parts() const { return parts_; }

  const CorrectedHamiltonian* locate(Point z) const;
  double value(Point z) const;
  Point gradient(Point z) const;
  HamiltonianField field() const;

  /// sup |H_v| over sampled points with 1 - 1e-3 <= |z| <= 1.
  double boundary_sup(std::size_t samples = 4096) const;

 private:
  static constexpr int kCells = 128;
  std::size_t vertex_;
  RoundAnnulus annulus_;
  std::vector<CorrectedHamiltonian> parts_;
  std::vector<std::vector<std::uint32_t>> cells_;
};

AssembledHamiltonian assemble_Hv(std::size_t v, const std::vector<GroupElement>& elements,
                                 const RoundAnnulus& A, double tol = 1e-8);

/// eta_eps(z) = exp(-eps tan^2(pi |z| / 2)) inside the disk, 0 outside.
double mollifier(double eps, Point z);
Point mollifier_gradient(double eps, Point z);

/// eta_eps H_v with gradient eta grad H + H grad eta.
HamiltonianField smooth_Hv(std::shared_ptr<const AssembledHamiltonian> H, double eps);

/// Annulus used by the hyperbolic studies when none is supplied; it lies in
/// |z| < 1/2, inside the Schottky fundamental domain.
RoundAnnulus default_lift_annulus();

struct LengthRow {
  std::size_t length = 0;
  std::size_t count = 0;
  double max_lambda2 = 0.0;
  double sup_H = 0.0;
  double max_diameter = 0.0;
  double min_r = 1.0;  // smallest 1 - |z| over the sampled region points
  std::array<double, 3> sup_derivative{};  // n = 1, 2, 3
};

struct EstimateReport {
  std::vector<LengthRow> rows;
  std::array<double, 3> slopes{};     // growth exponent of sup |D^n H| in 1/r
  std::array<double, 3> slope_limits{};
  std::array<bool, 3> slope_ok{};
  std::size_t regression_points = 0;
  bool lambda_decreasing = false;     // strictly, for lengths >= 2
  double lambda_ratio = 0.0;          // max lambda^2 at the last length / at length 1
  bool first_derivative_vanishes = false;
  bool second_derivative_bounded = false;
  double boundary_sup = 0.0;

  nlohmann::json to_json() const;
  /// word_length,count,max_lambda2,sup_H,max_diameter,sup_d1,sup_d2,sup_d3
  std::string to_csv() const;
};

/// Decay table and derivative growth regressions. Derivatives are central
/// differences along four directions with step 1e-3 r, r = 1 - |z|. Needs
/// enumeration depth >= 4; throws InputError otherwise.
EstimateReport analytic_report(const AssembledHamiltonian& H, std::size_t samples_per_region = 60);

}  // namespace raagham::hyper
