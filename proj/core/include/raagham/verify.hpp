#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "raagham/representation.hpp"

namespace raagham::dyn {

struct JacobianStats {
  std::size_t count = 0;
  double mean_deviation = 0.0;  // mean |det J - 1|
  double max_deviation = 0.0;
};

/// Determinant of the fourth-order central-difference Jacobian at each point.
JacobianStats jacobian_probe(const std::function<Point(Point)>& f, const std::vector<Point>& pts,
                             double step);

/// Same probe for the closed-form generator image f_v^{N e}, evaluated in
/// quadruple precision with step relative_step * (annulus thickness). Thin
/// configuration annuli make the twist shear reach 1e4; in double precision
/// the rounding of f over any step well below the thickness then swamps 1e-6.
JacobianStats generator_jacobian_probe(const twist::Representation& rep, std::size_t vertex,
                                       int exponent, const std::vector<Point>& pts,
                                       double relative_step = 1e-8);

/// Area-uniform random points of the open annulus.
std::vector<Point> support_samples(const twist::RoundAnnulus& a, std::size_t n, std::mt19937_64& rng);

/// Integrated route: each letter is the time-(N e) flow of the twist
/// hamiltonian of its annulus, with steps_per_unit steps per unit time.
std::vector<Point> rep_apply_integrated(const twist::Representation& rep, const raag::Word& w,
                                        const std::vector<Point>& pts,
                                        std::size_t steps_per_unit = 1000);

struct PairResult {
  std::size_t u = 0, v = 0;    // Artin graph vertices
  double displacement = 0.0;   // max over the probed points
  bool bitwise_identity = false;
  bool pass = false;
};

struct GeneratorResult {
  std::size_t vertex = 0;        // acting graph vertex
  double puncture_residual = 0.0;
  JacobianStats jacobian;        // quadruple precision
  JacobianStats jacobian_double; // same points, double precision, step relative to thickness
  bool pass = false;
};

struct VerifyOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 7;
  double floor = 1e-3;              // edge commutator displacement floor
  bool integrated = false;
  std::size_t steps_per_unit = 1000;
  std::size_t jacobian_points = 100;
  double jacobian_tol = 1e-6;
  double puncture_tol = 1e-9;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int N = 0;
  std::size_t samples = 0;
  bool integrated = false;
  double floor = 0.0;
  double non_edge_tol = 0.0;
  double puncture_tol = 0.0;
  double jacobian_tol = 0.0;
  std::vector<PairResult> non_edges;
  std::vector<PairResult> edges;
  std::vector<GeneratorResult> generators;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// Sample points: half quasi-random in the supports, half in the box around
/// the configuration (Halton sequence with a seeded shift).
std::vector<Point> relation_samples(const twist::Configuration& c, std::size_t n, std::uint64_t seed);

/// Non-edge commutators on the samples (<= 1e-9 closed form, <= 1e-5
/// integrated), edge commutators on the overlap probes (>= floor), punctures
/// under every generator, and generator Jacobians.
VerificationReport verify_relations(const twist::Representation& rep, const VerifyOptions& opts = {});

enum class Verdict { Nontrivial, Inconclusive };
std::string to_string(Verdict v);

struct ProbeRow {
  std::string word;
  std::size_t length = 0;
  double displacement = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  bool sampled = false;  // random longer word rather than enumerated
};

struct ProbeOptions {
  std::size_t cap = 20000;          // enumerated normal forms
  std::size_t random_samples = 32;  // extra words of length max_len+1 .. 2 max_len
  double threshold = 1e-6;
};

struct FaithfulnessTable {
  std::size_t max_len = 0;
  std::uint64_t seed = 0;
  double threshold = 0.0;
  std::size_t enumerated = 0;
  bool cap_reached = false;
  std::vector<ProbeRow> rows;

  std::size_t nontrivial() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;  // word,length,displacement,verdict,sampled
};

/// All nontrivial normal forms of length <= max_len, in shortlex order.
std::vector<raag::Word> enumerate_normal_forms(const graphs::SimplicialGraph& g, std::size_t max_len,
                                               std::size_t cap, bool* cap_reached = nullptr);

/// Numerical surrogate for injectivity: max displacement of the marked
/// points under each nontrivial word. Zero displacement is INCONCLUSIVE, not
/// a counterexample.
FaithfulnessTable faithfulness_probe(const twist::Representation& rep, std::size_t max_len,
                                     const std::vector<Point>& marked, std::uint64_t seed,
                                     const ProbeOptions& opts = {});

}  // namespace raagham::dyn
