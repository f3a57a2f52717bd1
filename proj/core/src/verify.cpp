#include "raagham/verify.hpp"

#include <algorithm>
#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "raagham/errors.hpp"
#include "raagham/flow.hpp"
#include "raagham/parallel.hpp"
#include "raagham/rng.hpp"

namespace raagham::dyn {

using twist::Representation;
using twist::RoundAnnulus;

namespace {

template <class P, class F>
double stencil_det(const F& f, P z, typename P::value_type h) {
  using T = typename P::value_type;
  auto d = [&](P e) {
    return (T(8) * (f(z + h * e) - f(z - h * e)) - (f(z + T(2) * h * e) - f(z - T(2) * h * e))) / (T(12) * h);
  };
  const P fx = d(P(1, 0)), fy = d(P(0, 1));
  return static_cast<double>(fx.real() * fy.imag() - fx.imag() * fy.real());
}

// Minimal complex type over float128 (std::complex is only specified for the
// built-in floating types).
struct QPoint {
  using value_type = boost::multiprecision::float128;
  value_type x, y;
  QPoint(value_type a = 0, value_type b = 0) : x(a), y(b) {}
  value_type real() const { return x; }
  value_type imag() const { return y; }
  friend QPoint operator+(QPoint a, QPoint b) { return {a.x + b.x, a.y + b.y}; }
  friend QPoint operator-(QPoint a, QPoint b) { return {a.x - b.x, a.y - b.y}; }
  friend QPoint operator*(value_type s, QPoint a) { return {s * a.x, s * a.y}; }
  friend QPoint operator/(QPoint a, value_type s) { return {a.x / s, a.y / s}; }
};

QPoint twist_quad(const RoundAnnulus& a, const twist::TwistProfile& p, QPoint::value_type tau, QPoint z) {
  using Q = QPoint::value_type;
  const Q cx = a.center.real(), cy = a.center.imag();
  const Q ri = a.r_inner, ro = a.r_outer;
  const Q dx = z.x - cx, dy = z.y - cy;
  const Q r2 = dx * dx + dy * dy;
  if (!(r2 > ri * ri && r2 < ro * ro)) return z;
  const Q t = (r2 - (ri * ri + ro * ro) / 2) / 2;
  const Q angle = -tau * twist::profile_slope<Q>(p, t);
  const Q c = cos(angle), s = sin(angle);
  return {cx + dx * c - dy * s, cy + dx * s + dy * c};
}

JacobianStats summarize(const std::vector<double>& dets) {
  JacobianStats s;
  s.count = dets.size();
  for (double d : dets) {
    s.mean_deviation += std::abs(d - 1.0);
    s.max_deviation = std::max(s.max_deviation, std::abs(d - 1.0));
  }
  if (s.count) s.mean_deviation /= static_cast<double>(s.count);
  return s;
}

double max_displacement(const std::vector<Point>& a, const std::vector<Point>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

raag::Word commutator(std::size_t u, std::size_t v) {
  return {raag::gen(u), raag::gen(v), raag::gen(u, -1), raag::gen(v, -1)};
}

double halton(std::uint64_t k, std::uint64_t base) {
  double f = 1.0, r = 0.0;
  for (; k; k /= base) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(k % base);
  }
  return r;
}

}  // namespace

JacobianStats jacobian_probe(const std::function<Point(Point)>& f, const std::vector<Point>& pts, double step) {
  if (!(step > 0)) throw InputError("jacobian probe needs a positive step");
  std::vector<double> dets;
  for (const Point& z : pts) dets.push_back(stencil_det(f, z, step));
  return summarize(dets);
}

JacobianStats generator_jacobian_probe(const Representation& rep, std::size_t v, int exponent,
                                       const std::vector<Point>& pts, double relative_step) {
  const auto& a = rep.config.annuli.at(v);
  const auto& p = rep.profiles.at(v);
  using Q = QPoint::value_type;
  const Q tau = Q(rep.N) * exponent;
  const Q h = Q(relative_step) * Q(a.r_outer - a.r_inner);
  auto f = [&](QPoint z) { return twist_quad(a, p, tau, z); };
  std::vector<double> dets;
  for (const Point& z : pts) dets.push_back(stencil_det(f, QPoint(z.real(), z.imag()), h));
  return summarize(dets);
}

std::vector<Point> support_samples(const RoundAnnulus& a, std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double r2 = uniform(rng, a.r_inner * a.r_inner, a.r_outer * a.r_outer);
    Point z = a.center + std::polar(std::sqrt(r2), uniform(rng, 0.0, kTwoPi));
    if (a.contains(z)) out.push_back(z); else --i;
  }
  return out;
}

std::vector<Point> rep_apply_integrated(const Representation& rep, const raag::Word& w,
                                        const std::vector<Point>& pts, std::size_t steps_per_unit) {
  const raag::Word acting = twist::acting_word(rep, w);
  std::vector<Point> out = pts;
  std::vector<HamiltonianField> fields;
  for (std::size_t v = 0; v < rep.config.annuli.size(); ++v) {
    fields.push_back(twist::twist_hamiltonian(rep.config.annuli[v], rep.profiles[v]));
  }
  parallel_for(out.size(), [&](std::size_t i) {
    Point z = out[i];
    for (auto it = acting.rbegin(); it != acting.rend(); ++it) {
      const std::size_t v = it->vertex.value;
      // The field vanishes off the annulus, where the flow is the identity.
      if (!rep.config.annuli[v].contains(z)) continue;
      const double T = static_cast<double>(rep.N * it->exponent);
      const auto steps = static_cast<std::size_t>(std::ceil(std::abs(T) * steps_per_unit));
      z = flow_map(fields[v], z, T, steps).final;
    }
    out[i] = z;
  });
  return out;
}

std::vector<Point> relation_samples(const twist::Configuration& c, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double s1 = uniform01(rng), s2 = uniform01(rng);
  std::vector<Point> out;
  const double box = 0.6;
  for (std::size_t k = 0; k < n; ++k) {
    const double u = std::fmod(halton(k + 1, 2) + s1, 1.0), v = std::fmod(halton(k + 1, 3) + s2, 1.0);
    if (k % 2 == 0 && !c.annuli.empty()) {
      const auto& a = c.annuli[(k / 2) % c.annuli.size()];
      const double r2 = a.r_inner * a.r_inner + (a.r_outer * a.r_outer - a.r_inner * a.r_inner) * u;
      out.push_back(a.center + std::polar(std::sqrt(r2), kTwoPi * v));
    } else {
      out.emplace_back(box * (2 * u - 1), box * (2 * v - 1));
    }
  }
  return out;
}

VerificationReport verify_relations(const Representation& rep, const VerifyOptions& opts) {
  VerificationReport r;
  r.seed = opts.seed;
  r.N = rep.N;
  r.samples = opts.samples;
  r.integrated = opts.integrated;
  r.floor = opts.floor;
  r.non_edge_tol = opts.integrated ? 1e-5 : 1e-9;
  r.puncture_tol = opts.puncture_tol;
  r.jacobian_tol = opts.jacobian_tol;

  const auto& g = rep.artin_graph;
  auto apply = [&](const raag::Word& w, const std::vector<Point>& pts) {
    return opts.integrated ? rep_apply_integrated(rep, w, pts, opts.steps_per_unit) : twist::rep_apply(rep, w, pts);
  };

  const auto samples = relation_samples(rep.config, opts.samples, opts.seed);
  std::vector<Point> probes;
  for (const auto& edge_probes : twist::overlap_probe_points(rep.config)) {
    probes.insert(probes.end(), edge_probes.begin(), edge_probes.end());
  }
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      PairResult pr{u, v};
      const bool edge = g.adjacent(graphs::vid(u), graphs::vid(v));
      const auto& pts = edge ? probes : samples;
      const auto out = apply(commutator(u, v), pts);
      pr.displacement = max_displacement(out, pts);
      pr.bitwise_identity = out == pts;
      if (edge) {
        pr.pass = pr.displacement > opts.floor;
        r.edges.push_back(pr);
      } else {
        pr.pass = pr.displacement <= r.non_edge_tol;
        r.non_edges.push_back(pr);
      }
    }
  }

  const auto punctures = rep.config.punctures();
  const std::size_t n = rep.config.annuli.size();
  r.generators.resize(n);
  parallel_for(n, [&](std::size_t v) {
    GeneratorResult gr;
    gr.vertex = v;
    for (int e : {1, -1}) {
      const auto f = twist::generator_map(rep, v, e);
      for (const Point& p : punctures) gr.puncture_residual = std::max(gr.puncture_residual, std::abs(f.forward(p) - p));
    }
    std::mt19937_64 rng(opts.seed * 1000003 + v);
    const auto& a = rep.config.annuli[v];
    const auto pts = support_samples(a, opts.jacobian_points, rng);
    gr.jacobian = generator_jacobian_probe(rep, v, 1, pts, 1e-8);
    gr.jacobian_double = jacobian_probe(twist::generator_map(rep, v, 1).forward, pts,
                                        1e-5 * (a.r_outer - a.r_inner));
    gr.pass = gr.puncture_residual <= opts.puncture_tol && gr.jacobian.max_deviation <= opts.jacobian_tol;
    r.generators[v] = gr;
  });
  return r;
}

bool VerificationReport::pass() const {
  auto ok = [](const auto& v) { return std::all_of(v.begin(), v.end(), [](const auto& x) { return x.pass; }); };
  return ok(non_edges) && ok(edges) && ok(generators);
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["N"] = N;
  j["samples"] = samples;
  j["route"] = integrated ? "integrated" : "closed-form";
  j["tolerances"] = {{"edge_floor", floor}, {"non_edge", non_edge_tol}, {"puncture", puncture_tol},
                     {"jacobian", jacobian_tol}};
  auto pairs = [](const std::vector<PairResult>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : v) {
      a.push_back({{"u", p.u}, {"v", p.v}, {"displacement", p.displacement},
                   {"bitwise_identity", p.bitwise_identity}, {"pass", p.pass}});
    }
    return a;
  };
  j["non_edge_commutators"] = pairs(non_edges);
  j["edge_commutators"] = pairs(edges);
  j["generators"] = nlohmann::json::array();
  for (const auto& g : generators) {
    j["generators"].push_back({{"vertex", g.vertex},
                               {"puncture_residual", g.puncture_residual},
                               {"jacobian_max_deviation", g.jacobian.max_deviation},
                               {"jacobian_mean_deviation", g.jacobian.mean_deviation},
                               {"jacobian_double_max_deviation", g.jacobian_double.max_deviation},
                               {"pass", g.pass}});
  }
  j["pass"] = pass();
  return j;
}

std::string to_string(Verdict v) { return v == Verdict::Nontrivial ? "NONTRIVIAL" : "INCONCLUSIVE"; }

std::size_t FaithfulnessTable::nontrivial() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ProbeRow& r) {
    return r.verdict == Verdict::Nontrivial;
  }));
}

nlohmann::json FaithfulnessTable::to_json() const {
  nlohmann::json j;
  j["max_len"] = max_len;
  j["seed"] = seed;
  j["threshold"] = threshold;
  j["enumerated"] = enumerated;
  j["cap_reached"] = cap_reached;
  j["nontrivial"] = nontrivial();
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"word", r.word}, {"length", r.length}, {"displacement", r.displacement},
                         {"verdict", to_string(r.verdict)}, {"sampled", r.sampled}});
  }
  return j;
}

std::string FaithfulnessTable::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "word,length,displacement,verdict,sampled\n";
  for (const auto& r : rows) {
    out << '"' << r.word << "\"," << r.length << "," << r.displacement << "," << to_string(r.verdict) << ","
        << (r.sampled ? 1 : 0) << "\n";
  }
  return out.str();
}

std::vector<raag::Word> enumerate_normal_forms(const graphs::SimplicialGraph& g, std::size_t max_len,
                                               std::size_t cap, bool* cap_reached) {
  if (cap_reached) *cap_reached = false;
  std::vector<raag::Word> out;
  std::vector<raag::Word> level{raag::Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::set<raag::Word> next;
    for (const auto& w : level) {
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (int e : {1, -1}) {
          raag::Word x = w;
          x.push_back(raag::gen(v, e));
          auto nf = raag::normal_form(g, x).word;
          if (nf.size() == len) next.insert(std::move(nf));
        }
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end(), raag::shortlex_less);
    for (const auto& w : level) {
      if (out.size() >= cap) {
        if (cap_reached) *cap_reached = true;
        return out;
      }
      out.push_back(w);
    }
  }
  return out;
}

FaithfulnessTable faithfulness_probe(const Representation& rep, std::size_t max_len,
                                     const std::vector<Point>& marked, std::uint64_t seed,
                                     const ProbeOptions& opts) {
  if (max_len < 1) throw InputError("faithfulness probe needs max_len >= 1");
  const auto& g = rep.artin_graph;
  FaithfulnessTable t;
  t.max_len = max_len;
  t.seed = seed;
  t.threshold = opts.threshold;
  std::vector<std::pair<raag::Word, bool>> words;
  for (auto& w : enumerate_normal_forms(g, max_len, opts.cap, &t.cap_reached)) words.emplace_back(std::move(w), false);
  t.enumerated = words.size();
  std::mt19937_64 rng(seed);
  std::set<raag::Word> seen;
  for (std::size_t k = 0; k < opts.random_samples && g.vertex_count() > 0; ++k) {
    const std::size_t len = max_len + 1 + uniform_index(rng, max_len);
    auto nf = raag::normal_form(g, raag::random_word(rng, g.vertex_count(), len)).word;
    if (nf.size() <= max_len || !seen.insert(nf).second) continue;
    words.emplace_back(std::move(nf), true);
  }
  t.rows.resize(words.size());
  parallel_for(words.size(), [&](std::size_t i) {
    const auto out = twist::rep_apply(rep, words[i].first, marked);
    ProbeRow row;
    row.word = raag::format_word(g, words[i].first);
    row.length = words[i].first.size();
    row.displacement = max_displacement(out, marked);
    row.verdict = row.displacement > opts.threshold ? Verdict::Nontrivial : Verdict::Inconclusive;
    row.sampled = words[i].second;
    t.rows[i] = row;
  });
  return t;
}

}  // namespace raagham::dyn
