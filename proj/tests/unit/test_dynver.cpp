#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "raagham/errors.hpp"
#include "raagham/flow.hpp"
#include "raagham/polydisk.hpp"
#include "raagham/representation.hpp"
#include "raagham/rng.hpp"
#include "raagham/verify.hpp"

using namespace raagham;
using namespace raagham::dyn;

namespace {

HamiltonianField rotation_field() {
  return {[](Point z) { return kPi * std::norm(z); }, [](Point z) { return 2 * kPi * z; }, 0.0};
}

const twist::RoundAnnulus kUnit{{0.3, -0.2}, 1.0, std::sqrt(3.0)};

}  // namespace

TEST(Flow, ZeroFieldIsIdentity) {
  HamiltonianField zero{[](Point) { return 0.0; }, [](Point) { return Point(0, 0); }, 0.0};
  auto r = flow_map(zero, Point(0.3, 0.7), 5.0, 10);
  EXPECT_EQ(r.final, Point(0.3, 0.7));
  EXPECT_EQ(r.energy_drift, 0.0);
}

TEST(Flow, RotationQuarterTurn) {
  auto r = flow_map(rotation_field(), Point(1, 0), 0.25, 1000);
  EXPECT_LT(std::abs(r.final - Point(0, -1)), 1e-6);
  EXPECT_LT(r.energy_drift, 1e-12);
  EXPECT_EQ(r.steps, 1000u);
}

TEST(Flow, RecordsTrajectory) {
  FlowOptions o;
  o.record_every = 10;
  auto r = flow_map(rotation_field(), Point(0.5, 0), 1.0, 100, o);
  EXPECT_EQ(r.trajectory.size(), 11u);
  EXPECT_EQ(r.trajectory.front(), Point(0.5, 0));
  EXPECT_EQ(r.trajectory.back(), r.final);
  for (const Point& z : r.trajectory) EXPECT_NEAR(std::abs(z), 0.5, 1e-12);
}

TEST(Flow, TrackedJacobianIsSymplectic) {
  FlowOptions o;
  o.track_jacobian = true;
  auto twist = twist::twist_hamiltonian(kUnit, twist::standard_profile(kUnit));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const Point z = kUnit.center + std::polar(uniform(rng, 1.1, 1.6), uniform(rng, 0, kTwoPi));
    auto r = flow_map(twist, z, 0.5, 2000, o);
    const auto& J = r.jacobian;
    EXPECT_NEAR(J[0] * J[3] - J[1] * J[2], 1.0, 1e-9);
  }
}

TEST(Flow, RejectsZeroStepsAndDiverges) {
  EXPECT_THROW(flow_map(rotation_field(), Point(1, 0), 1.0, 0), InputError);
  HamiltonianField blowup{[](Point z) { return std::pow(std::norm(z), 3); },
                          [](Point z) { return 6.0 * std::pow(std::norm(z), 2) * z; }, 0.0};
  EXPECT_THROW(flow_map(blowup, Point(100, 0), 1.0, 1), IntegratorDivergence);
}

TEST(Flow, TwistMatchesClosedForm) {
  auto prof = twist::standard_profile(kUnit);
  auto field = twist::twist_hamiltonian(kUnit, prof);
  auto closed = twist::double_dehn_twist(kUnit, prof, 1.0);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 6; ++i) {
    const Point z = kUnit.center + std::polar(uniform(rng, 1.05, 1.7), uniform(rng, 0, kTwoPi));
    auto r = flow_map(field, z, 1.0, 50000);
    EXPECT_LT(std::abs(r.final - closed.forward(z)), 1e-5);
    EXPECT_LT(r.energy_drift, 1e-10);
  }
  // Outside the support nothing moves.
  EXPECT_EQ(flow_map(field, kUnit.center, 1.0, 100).final, kUnit.center);
}

TEST(Flow, ProductFieldDecouples) {
  ProductField f;
  f.dim = 2;
  f.weights = {1.0, 2.0};
  f.value = [](std::span<const Point> z) { return kPi * (std::norm(z[0]) + std::norm(z[1])); };
  f.gradient = [](std::span<const Point> z, std::span<Point> g) {
    g[0] = 2 * kPi * z[0];
    g[1] = 2 * kPi * z[1];
  };
  auto r = flow_map(f, {Point(1, 0), Point(1, 0)}, 0.25, 2000);
  EXPECT_LT(std::abs(r.final[0] - Point(0, -1)), 1e-6);
  // weight 2 halves the speed: an eighth of a turn
  EXPECT_LT(std::abs(r.final[1] - std::polar(1.0, -kPi / 4)), 1e-6);
  EXPECT_LT(r.energy_drift, 1e-12);
}

TEST(Jacobian, IdentityAndShear) {
  std::vector<Point> pts{{0.1, 0.2}, {-0.5, 0.3}, {2.0, -1.0}};
  auto id = jacobian_probe([](Point z) { return z; }, pts, 1e-4);
  EXPECT_EQ(id.count, 3u);
  EXPECT_LT(id.max_deviation, 1e-10);
  auto shear = jacobian_probe([](Point z) { return Point(z.real() + 7 * z.imag(), z.imag()); }, pts, 1e-4);
  EXPECT_LT(shear.max_deviation, 1e-10);
  auto scale = jacobian_probe([](Point z) { return 2.0 * z; }, pts, 1e-4);
  EXPECT_NEAR(scale.max_deviation, 3.0, 1e-10);
}

TEST(Jacobian, GeneratorsInQuadPrecision) {
  auto rep = twist::build_representation(graphs::path_graph(3), 2);
  std::mt19937_64 rng(5);
  for (std::size_t v = 0; v < 3; ++v) {
    auto pts = support_samples(rep.config.annuli[v], 50, rng);
    for (const Point& z : pts) EXPECT_TRUE(rep.config.annuli[v].contains(z));
    EXPECT_LT(generator_jacobian_probe(rep, v, 1, pts).max_deviation, 1e-10);
    EXPECT_LT(generator_jacobian_probe(rep, v, -1, pts).max_deviation, 1e-10);
  }
}

TEST(Integrated, AgreesWithClosedForm) {
  auto rep = twist::build_representation(graphs::path_graph(2), 2);
  std::mt19937_64 rng(6);
  auto pts = support_samples(rep.config.annuli[0], 4, rng);
  const raag::Word w{raag::gen(0, 1)};
  auto a = twist::rep_apply(rep, w, pts);
  auto b = rep_apply_integrated(rep, w, pts, 20000);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-4);
}

TEST(Verify, EmptyGraphAllCommute) {
  auto rep = twist::build_representation(graphs::empty_graph(3), 2);
  VerifyOptions o;
  o.samples = 200;
  auto r = verify_relations(rep, o);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.non_edges.size(), 3u);
  EXPECT_TRUE(r.edges.empty());
  for (const auto& p : r.non_edges) EXPECT_TRUE(p.bitwise_identity);
  EXPECT_EQ(r.generators.size(), 3u);
  auto j = r.to_json();
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Verify, SingleEdge) {
  auto rep = twist::build_representation(graphs::path_graph(2), 2);
  VerifyOptions o;
  o.samples = 200;
  auto r = verify_relations(rep, o);
  EXPECT_TRUE(r.pass());
  ASSERT_EQ(r.edges.size(), 1u);
  EXPECT_GT(r.edges[0].displacement, o.floor);
  EXPECT_TRUE(r.non_edges.empty());
  for (const auto& g : r.generators) {
    EXPECT_LT(g.puncture_residual, 1e-9);
    EXPECT_LT(g.jacobian.max_deviation, 1e-6);
  }
  // deterministic under the same seed
  EXPECT_EQ(r.to_json().dump(), verify_relations(rep, o).to_json().dump());
}

TEST(Verify, SamplesAreSeeded) {
  auto rep = twist::build_representation(graphs::cycle_graph(4), 2);
  auto a = relation_samples(rep.config, 100, 1), b = relation_samples(rep.config, 100, 1),
       c = relation_samples(rep.config, 100, 2);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  std::size_t inside = 0;
  for (const Point& z : a) {
    for (const auto& ann : rep.config.annuli) {
      if (ann.contains(z)) {
        ++inside;
        break;
      }
    }
  }
  EXPECT_GE(inside, 50u);
}

TEST(Faithfulness, NormalFormCounts) {
  // Free group F_2: 4 words of length 1 and 12 of length 2.
  EXPECT_EQ(enumerate_normal_forms(graphs::path_graph(2), 2, 1000).size(), 16u);
  // Z^2: nonzero x^a y^b with |a| + |b| <= 2
  EXPECT_EQ(enumerate_normal_forms(graphs::empty_graph(2), 2, 1000).size(), 12u);
  bool capped = false;
  EXPECT_EQ(enumerate_normal_forms(graphs::path_graph(3), 6, 50, &capped).size(), 50u);
  EXPECT_TRUE(capped);
}

TEST(Faithfulness, EdgeGraphAllNontrivial) {
  auto rep = twist::build_representation(graphs::path_graph(2), 2);
  const auto marked = twist::default_marked_points(rep.config);
  ProbeOptions o;
  o.random_samples = 10;
  auto t = faithfulness_probe(rep, 2, marked, 11, o);
  EXPECT_EQ(t.enumerated, 16u);
  // sampled words that reduce to length <= 2 or repeat are dropped
  EXPECT_GT(t.rows.size(), 16u);
  EXPECT_LE(t.rows.size(), 26u);
  EXPECT_EQ(t.nontrivial(), t.rows.size());
  for (const auto& row : t.rows) EXPECT_EQ(row.verdict, Verdict::Nontrivial) << row.word;
  EXPECT_EQ(t.to_csv().substr(0, 41), "word,length,displacement,verdict,sampled\n");
  EXPECT_EQ(t.to_json().dump(), faithfulness_probe(rep, 2, marked, 11, o).to_json().dump());
  EXPECT_EQ(to_string(Verdict::Inconclusive), "INCONCLUSIVE");
}

TEST(Polydisk, SliceIdentities) {
  auto k = twist::twist_hamiltonian(kUnit, twist::standard_profile(kUnit));
  for (std::size_t n : {2u, 3u}) {
    auto h = polydisk_extend(k, n, 1.0, 2.0);
    std::mt19937_64 rng(n);
    std::vector<Point> slice;
    for (int i = 0; i < 40; ++i) slice.push_back(kUnit.center + std::polar(uniform(rng, 0.8, 1.9), uniform(rng, 0, kTwoPi)));
    auto rep = polydisk_slice_check(h, slice, 0.3, 3000, 4);
    EXPECT_EQ(rep.value_gap, 0.0);
    EXPECT_LT(rep.gradient_gap, 1e-15);
    EXPECT_EQ(rep.transverse_gradient, 0.0);
    EXPECT_LT(rep.flow_gap, 1e-9);
    EXPECT_EQ(rep.transverse_drift, 0.0);
  }
  EXPECT_THROW(polydisk_extend(k, 1), InputError);
  EXPECT_THROW(polydisk_extend(k, 2, 1.0, 0.0), InputError);
}

TEST(Polydisk, TransverseFactorsMoveOffTheSlice) {
  auto h = polydisk_extend(rotation_field(), 2, 1.0, 1.0);
  std::vector<Point> z{Point(0.5, 0), Point(0.2, 0.1)};
  auto g = h.gradient(z);
  EXPECT_GT(std::abs(g[1]), 0.0);
  auto r = flow_map(h.product(), z, 0.1, 1000);
  EXPECT_LT(r.energy_drift, 1e-10);
}
