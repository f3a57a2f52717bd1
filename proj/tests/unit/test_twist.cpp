#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "raagham/configuration.hpp"
#include "raagham/errors.hpp"
#include "raagham/representation.hpp"
#include "raagham/rng.hpp"
#include "raagham/twist.hpp"

using namespace raagham;
using namespace raagham::twist;

namespace {

// Fourth-order central differences; the second-order stencil is too coarse at
// the shear rates of a full twist.
double jacobian(const std::function<Point(Point)>& f, Point z, double h) {
  auto d = [&](Point e) { return (8.0 * (f(z + h * e) - f(z - h * e)) - (f(z + 2.0 * h * e) - f(z - 2.0 * h * e))) / (12 * h); };
  const Point fx = d(Point(1, 0)), fy = d(Point(0, 1));
  return fx.real() * fy.imag() - fx.imag() * fy.real();
}

Point random_in(std::mt19937_64& rng, const RoundAnnulus& a) {
  const double r2 = uniform(rng, a.r_inner * a.r_inner, a.r_outer * a.r_outer);
  const double th = uniform(rng, 0.0, kTwoPi);
  return a.center + std::polar(std::sqrt(r2), th);
}

const RoundAnnulus kUnit{{0.3, -0.2}, 1.0, std::sqrt(3.0)};

}  // namespace

TEST(Profile, CentredSlopeAndFlatEnds) {
  auto p = make_profile(0.5, 0.0);
  EXPECT_NEAR(p.dh(0.0), 2 * kPi, 1e-14);
  EXPECT_EQ(p.h(0.5), 0.0);
  EXPECT_EQ(p.h(-0.5), 0.0);
  EXPECT_LT(std::abs(p.dh(0.5)), 1e-12);
  EXPECT_LT(std::abs(p.dh(-0.5)), 1e-12);
}

TEST(Profile, OffCentre) {
  auto p = make_profile(0.5, 0.2);
  EXPECT_NEAR(p.dh(0.2), 2 * kPi, 1e-14);
  for (double t = -0.5; t <= 0.5; t += 1e-3) {
    if (t < -0.1 || t > 0.5) {
      EXPECT_EQ(p.h(t), 0.0) << t;
    }
  }
  EXPECT_NE(p.h(0.0), 0.0);
  EXPECT_THROW(make_profile(0.5, 0.5), InputError);
  EXPECT_THROW(make_profile(0.5, -0.7), InputError);
}

TEST(Profile, DerivativesMatchDifferences) {
  auto p = make_profile(0.5, 0.1);
  for (double t = -0.35; t < 0.45; t += 0.01) {
    const double h = 1e-6;
    EXPECT_NEAR(p.dh(t), (p.h(t + h) - p.h(t - h)) / (2 * h), 1e-7);
    EXPECT_NEAR(p.d2h(t), (p.dh(t + h) - p.dh(t - h)) / (2 * h), 1e-6);
  }
}

TEST(ProductTwist, Examples) {
  auto p = make_profile(0.5, 0.0);
  auto full = product_twist(p, 1.0, {1.0, 0.0}, true);
  EXPECT_NEAR(full.s, 1.0 + 2 * kPi, 1e-14);
  auto wrapped = product_twist(p, 1.0, {1.0, 0.0});
  EXPECT_NEAR(wrapped.s, 1.0, 1e-12);
  auto half = product_twist(p, 0.5, {0.0, 0.0});
  EXPECT_NEAR(half.s, kPi, 1e-12);
  for (double tau : {-3.0, 0.7, 5.0}) {
    auto edge = product_twist(p, tau, {2.0, 0.5});
    EXPECT_NEAR(edge.s, 2.0, 1e-12);
    EXPECT_EQ(edge.t, 0.5);
  }
  EXPECT_THROW(product_twist(p, 1.0, {0.0, 0.6}), InputError);
}

TEST(AreaChart, HandValues) {
  const RoundAnnulus a{{0, 0}, 1.0, std::sqrt(3.0)};
  AreaChart c(a);
  EXPECT_NEAR(c.half_width(), 0.5, 1e-15);
  EXPECT_NEAR(c.height(Point(std::sqrt(2.0), 0)), 0.0, 1e-15);
  EXPECT_NEAR(c.height(Point(0, 1.0)), -0.5, 1e-15);
  EXPECT_NEAR(c.height(Point(-std::sqrt(3.0), 0)), 0.5, 1e-15);
}

TEST(AreaChart, RoundTripAndSubAnnulusArea) {
  AreaChart c(kUnit);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Point z = random_in(rng, kUnit);
    EXPECT_LT(std::abs(c.from_product(c.to_product(z)) - z), 1e-12);
  }
  // Area of {r_in < r < r} by midpoint quadrature vs 2 pi (t(r) + a).
  for (double r : {1.1, 1.4, 1.7}) {
    const int n = 20000;
    double area = 0;
    for (int k = 0; k < n; ++k) {
      const double rr = 1.0 + (r - 1.0) * (k + 0.5) / n;
      area += kTwoPi * rr * (r - 1.0) / n;
    }
    EXPECT_NEAR(area, kTwoPi * (c.height_from_r2(r * r) + c.half_width()), 1e-8);
  }
}

TEST(DoubleTwist, IdentityAtZeroTime) {
  auto f = double_dehn_twist(kUnit, standard_profile(kUnit), 0.0);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Point z = random_in(rng, kUnit);
    EXPECT_EQ(f.forward(z), z);
  }
}

TEST(DoubleTwist, BoundaryFixedAndCentralCircleReturns) {
  auto prof = standard_profile(kUnit);
  auto f = double_dehn_twist(kUnit, prof, 1.0);
  const double rc = kUnit.central_radius();
  for (int k = 0; k < 64; ++k) {
    const double th = kTwoPi * k / 64;
    for (double r : {kUnit.r_inner, kUnit.r_outer}) {
      const Point z = kUnit.center + std::polar(r, th);
      EXPECT_LT(std::abs(f.forward(z) - z), 1e-12);
    }
    const Point zc = kUnit.center + std::polar(rc, th);
    EXPECT_LT(std::abs(f.forward(zc) - zc), 1e-9);
  }
  // Off-centre levels do move.
  const Point z = kUnit.center + std::polar(std::sqrt(2.0 - 0.3), 0.4);
  EXPECT_GT(std::abs(f.forward(z) - z), 1e-3);
}

TEST(DoubleTwist, GroupLawAndInverse) {
  auto prof = standard_profile(kUnit);
  std::mt19937_64 rng(5);
  for (auto [t1, t2] : {std::pair{0.3, 0.9}, {1.0, 1.0}, {-2.5, 0.4}}) {
    auto f1 = double_dehn_twist(kUnit, prof, t1);
    auto f2 = double_dehn_twist(kUnit, prof, t2);
    auto f12 = double_dehn_twist(kUnit, prof, t1 + t2);
    for (int i = 0; i < 100; ++i) {
      const Point z = random_in(rng, kUnit);
      EXPECT_LT(std::abs(f12.forward(z) - f1.forward(f2.forward(z))), 1e-12);
      EXPECT_LT(std::abs(f1.inverse(f1.forward(z)) - z), 1e-12);
    }
  }
}

TEST(DoubleTwist, HalvesComposeAndCommute) {
  auto prof = standard_profile(kUnit);
  auto full = double_dehn_twist(kUnit, prof, 1.0);
  auto plus = double_dehn_twist(kUnit, prof, 1.0, TwistPart::Plus);
  auto minus = double_dehn_twist(kUnit, prof, 1.0, TwistPart::Minus);
  std::mt19937_64 rng(8);
  int moved_plus = 0, moved_minus = 0;
  for (int i = 0; i < 500; ++i) {
    const Point z = random_in(rng, kUnit);
    const Point a = plus.forward(minus.forward(z));
    const Point b = minus.forward(plus.forward(z));
    EXPECT_LT(std::abs(full.forward(z) - a), 1e-12);
    EXPECT_LT(std::abs(a - b), 1e-12);
    moved_plus += std::abs(plus.forward(z) - z) > 1e-9;
    moved_minus += std::abs(minus.forward(z) - z) > 1e-9;
  }
  EXPECT_GT(moved_plus, 100);
  EXPECT_GT(moved_minus, 100);
}

TEST(DoubleTwist, AreaPreserving) {
  auto prof = standard_profile(kUnit);
  auto f = double_dehn_twist(kUnit, prof, 2.0);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Point z = random_in(rng, kUnit);
    EXPECT_NEAR(jacobian(f.forward, z, 1e-6), 1.0, 1e-6);
  }
  EXPECT_FALSE(f.in_support(kUnit.center));
  EXPECT_EQ(f.forward(kUnit.center + 5.0), kUnit.center + 5.0);
}

TEST(DoubleTwist, HamiltonianGradientMatchesDifferences) {
  auto field = twist_hamiltonian(kUnit, standard_profile(kUnit));
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const Point z = random_in(rng, kUnit);
    const double h = 1e-6;
    const Point fd((field.value(z + Point(h, 0)) - field.value(z - Point(h, 0))) / (2 * h),
                   (field.value(z + Point(0, h)) - field.value(z - Point(0, h))) / (2 * h));
    EXPECT_LT(std::abs(fd - field.gradient(z)), 1e-5 * std::max(1.0, std::abs(fd)));
  }
}

class ConfigurationCase : public ::testing::TestWithParam<int> {};

graphs::SimplicialGraph config_graph(int which) {
  switch (which) {
    case 0: return graphs::empty_graph(1);
    case 1: return graphs::path_graph(2);
    case 2: return graphs::path_graph(3);
    case 3: return graphs::cycle_graph(4);
    case 4: return graphs::complete_graph(4);
    default: return graphs::empty_graph(3);
  }
}

TEST_P(ConfigurationCase, ValidatesAndNerveMatches) {
  const auto g = config_graph(GetParam());
  auto e = std::get<graphs::PlanarEmbedding>(graphs::planarity(g));
  auto c = build_configuration(e);
  EXPECT_TRUE(validate_configuration(c).empty());
  EXPECT_EQ(annulus_nerve(c).edges(), g.edges());
  const std::size_t expected_components = graphs::connected_components(g).size() + 2 * g.edge_count() + 1;
  EXPECT_EQ(c.complementary_components, expected_components);
  EXPECT_EQ(c.punctures().size(), 2 * g.vertex_count() + 2 * expected_components + 1);
  for (const Point& p : c.punctures()) EXPECT_LT(std::abs(p), 1.0);
}

INSTANTIATE_TEST_SUITE_P(Graphs, ConfigurationCase, ::testing::Range(0, 6));

TEST(Configuration, SingleVertexHasSevenPunctures) {
  auto e = std::get<graphs::PlanarEmbedding>(graphs::planarity(graphs::empty_graph(1)));
  auto c = build_configuration(e);
  EXPECT_EQ(c.punctures().size(), 7u);
  EXPECT_EQ(c.complementary_components, 2u);
}

TEST(Configuration, PathEndsDisjoint) {
  auto e = std::get<graphs::PlanarEmbedding>(graphs::planarity(graphs::path_graph(3)));
  auto c = build_configuration(e);
  EXPECT_FALSE(annuli_intersect(c.annuli[0], c.annuli[2]));
  EXPECT_TRUE(annuli_intersect(c.annuli[0], c.annuli[1]));
  EXPECT_TRUE(annuli_intersect(c.annuli[1], c.annuli[2]));
}

TEST(Configuration, JsonCarriesProvenance) {
  auto e = std::get<graphs::PlanarEmbedding>(graphs::planarity(graphs::cycle_graph(4)));
  auto c = build_configuration(e);
  auto j = to_json(c);
  EXPECT_TRUE(j.contains("circles"));
  EXPECT_TRUE(j.contains("provenance"));
  EXPECT_EQ(j.dump(), to_json(build_configuration(e)).dump());
  EXPECT_NE(to_svg(c).find("<svg"), std::string::npos);
}

namespace {

Representation planar_rep(const graphs::SimplicialGraph& g, int N = 2) {
  return build_representation(g, N);
}

raag::Word commutator(std::size_t u, std::size_t v) {
  using raag::gen;
  return {gen(u), gen(v), gen(u, -1), gen(v, -1)};
}

}  // namespace

TEST(Representation, RejectsNOne) {
  EXPECT_THROW(planar_rep(graphs::path_graph(2), 1), InputError);
  EXPECT_NO_THROW(planar_rep(graphs::path_graph(2), 2));
}

TEST(Representation, NonEdgeCommutatorIsBitwiseIdentity) {
  auto rep = planar_rep(graphs::empty_graph(2));
  std::mt19937_64 rng(2);
  std::vector<Point> pts;
  for (int i = 0; i < 300; ++i) pts.push_back(random_in(rng, rep.config.annuli[i % 2]));
  for (int i = 0; i < 100; ++i) pts.emplace_back(uniform(rng, -0.6, 0.6), uniform(rng, -0.6, 0.6));
  auto out = rep_apply(rep, commutator(0, 1), pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(out[i].real(), pts[i].real());
    EXPECT_EQ(out[i].imag(), pts[i].imag());
  }
}

TEST(Representation, EdgeCommutatorMovesOverlapPoints) {
  auto rep = planar_rep(graphs::path_graph(2));
  auto probes = overlap_probe_points(rep.config);
  ASSERT_EQ(probes.size(), 1u);
  double best = 0;
  auto out = rep_apply(rep, commutator(0, 1), probes[0]);
  for (std::size_t i = 0; i < out.size(); ++i) best = std::max(best, std::abs(out[i] - probes[0][i]));
  EXPECT_GT(best, 1e-3);
}

TEST(Representation, PuncturesFixed) {
  auto rep = planar_rep(graphs::cycle_graph(4));
  const auto pts = rep.config.punctures();
  for (std::size_t v = 0; v < 4; ++v) {
    for (int e : {1, -1}) {
      auto out = rep_apply(rep, {raag::gen(v, e)}, pts);
      for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_LT(std::abs(out[i] - pts[i]), 1e-9);
    }
  }
}

TEST(Representation, MatchesGeneratorMapComposition) {
  auto rep = planar_rep(graphs::path_graph(3));
  std::mt19937_64 rng(4);
  const auto marked = default_marked_points(rep.config);
  for (int trial = 0; trial < 20; ++trial) {
    auto w = raag::random_word(rng, 3, 6);
    auto out = rep_apply(rep, w, marked);
    for (std::size_t i = 0; i < marked.size(); ++i) {
      Point z = marked[i];
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        z = generator_map(rep, it->vertex.value, it->exponent).forward(z);
      }
      // Sequential rounding is amplified by the twist shear (up to ~1e4 on
      // thin annuli) once per letter; the lazy state rounds only once.
      EXPECT_LT(std::abs(out[i] - z), 1e-9);
    }
  }
}

TEST(Representation, NormalFormInvariance) {
  auto rep = planar_rep(graphs::cycle_graph(4));
  std::mt19937_64 rng(6);
  const auto marked = default_marked_points(rep.config);
  for (int trial = 0; trial < 30; ++trial) {
    auto w = raag::random_word(rng, 4, 10);
    auto nf = raag::normal_form(rep.artin_graph, w).word;
    auto a = rep_apply(rep, w, marked);
    auto b = rep_apply(rep, nf, marked);
    for (std::size_t i = 0; i < marked.size(); ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-9);
  }
}

TEST(Representation, K5ThroughPlanarDoubleCover) {
  auto rep = planar_rep(graphs::complete_graph(5));
  ASSERT_TRUE(rep.pullback.has_value());
  EXPECT_EQ(rep.acting_graph().vertex_count(), 10u);
  EXPECT_TRUE(validate_configuration(rep.config).empty());
  // Non-edges of K5 do not exist; every pair is an edge, so commutators act.
  auto w = commutator(0, 1);
  auto acting = acting_word(rep, w);
  EXPECT_EQ(acting.size(), 8u);
}

TEST(Representation, NonplanarWithoutEmulatorIsRejected) {
  RepresentationOptions opts;
  opts.max_sheets = 3;
  EXPECT_THROW(build_representation(graphs::torus_triangulation(4, 4), 2, {}, opts), InputError);
}
