#include "raagham/representation.hpp"

#include "raagham/errors.hpp"

namespace raagham::twist {

Representation build_representation(const graphs::SimplicialGraph& gamma, int N,
                                    const std::optional<graphs::GraphMorphism>& emulator,
                                    const RepresentationOptions& opts) {
  if (N < 2) throw InputError("N must be at least 2");
  Representation rep;
  rep.artin_graph = gamma;
  rep.N = N;
  auto planar = graphs::planarity(gamma);
  if (auto* e = std::get_if<graphs::PlanarEmbedding>(&planar); e && !emulator) {
    rep.config = build_configuration(*e, opts.config);
  } else {
    graphs::GraphMorphism proj;
    if (emulator) {
      if (!(emulator->target == gamma)) throw InputError("emulator does not cover the Artin graph");
      if (!graphs::is_orbicover(*emulator)) throw InputError("emulator is not an orbi-cover");
      proj = *emulator;
    } else {
      auto found = graphs::find_planar_emulator(gamma, {.max_sheets = opts.max_sheets});
      if (auto* nf = std::get_if<graphs::EmulatorNotFound>(&found)) {
        throw InputError("Artin graph is nonplanar and no planar emulator was found (" +
                         nf->reason + "); use the hyperbolic lift route");
      }
      proj = std::get<graphs::PlanarEmulator>(found).projection;
    }
    auto cover_planar = graphs::planarity(proj.source);
    auto* ce = std::get_if<graphs::PlanarEmbedding>(&cover_planar);
    if (!ce) throw InputError("emulator graph is not planar");
    rep.config = build_configuration(*ce, opts.config);
    rep.pullback = raag::hom_pullback(proj);
  }
  for (const auto& a : rep.config.annuli) rep.profiles.push_back(standard_profile(a));
  return rep;
}

raag::Word acting_word(const Representation& rep, const raag::Word& w) {
  raag::validate(rep.artin_graph, w);
  return rep.pullback ? raag::hom_apply(*rep.pullback, w) : w;
}

Point rep_apply_point(const Representation& rep, const raag::Word& acting, Point p) {
  const auto& annuli = rep.config.annuli;
  Point base = p;
  std::size_t idx = SIZE_MAX;
  double angle = 0.0;
  auto current = [&]() {
    return (idx == SIZE_MAX || angle == 0.0) ? base : rotate_about(base, annuli[idx].center, angle);
  };
  for (auto it = acting.rbegin(); it != acting.rend(); ++it) {
    const std::size_t v = it->vertex.value;
    const double tau = static_cast<double>(rep.N * it->exponent);
    const AreaChart chart(annuli[v]);
    if (idx == v) {
      angle += twist_angle(rep.profiles[v], tau, chart.height(base));
      continue;
    }
    const Point cur = current();
    if (!annuli[v].contains(cur)) continue;
    base = cur;
    idx = v;
    angle = twist_angle(rep.profiles[v], tau, chart.height(base));
  }
  return current();
}

std::vector<Point> rep_apply(const Representation& rep, const raag::Word& w,
                             const std::vector<Point>& pts) {
  const raag::Word acting = acting_word(rep, w);
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back(rep_apply_point(rep, acting, p));
  return out;
}

PlaneMap generator_map(const Representation& rep, std::size_t vertex, int exponent) {
  return double_dehn_twist(rep.config.annuli.at(vertex), rep.profiles.at(vertex),
                           static_cast<double>(rep.N * exponent));
}

}  // namespace raagham::twist
