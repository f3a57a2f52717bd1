#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "raagham/configuration.hpp"
#include "raagham/emulator.hpp"
#include "raagham/errors.hpp"
#include "raagham/graph.hpp"
#include "raagham/hyperlift.hpp"
#include "raagham/planarity.hpp"
#include "raagham/polydisk.hpp"
#include "raagham/raag.hpp"
#include "raagham/representation.hpp"
#include "raagham/rng.hpp"
#include "raagham/svg.hpp"
#include "raagham/verify.hpp"

namespace raagham::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json point_json(Point p) { return json::array({p.real(), p.imag()}); }

graphs::SimplicialGraph need_graph(const Inputs& in) {
  if (in.graph.empty()) throw InputError("--graph is required");
  return graphs::read_graph_file(in.graph);
}

std::string word_text(const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

raag::Word need_word(const Inputs& in, const graphs::SimplicialGraph& g, std::size_t i = 0) {
  if (in.words.size() <= i) throw InputError("--word is required");
  return raag::parse_word(g, word_text(in.words[i]));
}

std::optional<graphs::GraphMorphism> optional_cover(const Inputs& in, const graphs::SimplicialGraph& g) {
  if (in.cover.empty()) return std::nullopt;
  return graphs::parse_morphism(read_file(in.cover), g);
}

// Primary artifact: into --out when given, otherwise to standard output.
void emit(const Inputs& in, const std::string& name, const std::string& contents) {
  if (in.cfg.out) {
    write_atomic(*in.cfg.out / name, contents);
  } else {
    std::cout << contents;
  }
}

void emit_extra(const Inputs& in, const std::string& name, const std::string& contents) {
  if (in.cfg.out) write_atomic(*in.cfg.out / name, contents);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json certificate_json(const graphs::SimplicialGraph& cover, const graphs::SimplicialGraph& base,
                      const graphs::OrbicoverCertificate& c) {
  json w = json::array();
  for (auto [a, b] : c.witnesses) w.push_back({cover.name(a), cover.name(b)});
  json fibers = json::object();
  for (std::size_t v = 0; v < c.fiber_sizes.size(); ++v) fibers[base.name(graphs::vid(v))] = c.fiber_sizes[v];
  return {{"orbicover", true}, {"checked_pairs", c.checked_pairs}, {"fiber_sizes", fibers}, {"witnesses", w}};
}

json embedding_json(const graphs::PlanarEmbedding& e) {
  json pos = json::object();
  for (std::size_t v = 0; v < e.graph.vertex_count(); ++v) {
    pos[e.graph.name(graphs::vid(v))] = point_json(e.positions[v]);
  }
  return {{"positions", pos}, {"crossings", graphs::count_crossings(e)}};
}

twist::Representation make_rep(const Inputs& in) {
  const auto g = need_graph(in);
  twist::RepresentationOptions opts;
  opts.max_sheets = in.cfg.max_sheets;
  return twist::build_representation(g, in.cfg.N, optional_cover(in, g), opts);
}

json representation_json(const twist::Representation& rep) {
  json profiles = json::array();
  for (std::size_t v = 0; v < rep.profiles.size(); ++v) {
    profiles.push_back({{"vertex", rep.acting_graph().name(graphs::vid(v))},
                        {"half_width", rep.profiles[v].half_width()},
                        {"center", rep.profiles[v].center()}});
  }
  json j{{"N", rep.N},
         {"artin_graph", graphs::format_graph(rep.artin_graph)},
         {"acting_graph", graphs::format_graph(rep.acting_graph())},
         {"configuration", twist::to_json(rep.config)},
         {"profiles", profiles}};
  if (rep.pullback) j["pullback"] = raag::format_homomorphism(*rep.pullback);
  return j;
}

std::vector<hyper::GroupElement> schottky(std::size_t depth) {
  if (depth > 9) throw ResourceCapError("--depth above 9 exceeds the enumeration cap");
  return hyper::enumerate_group(hyper::schottky_generators(), depth);
}

}  // namespace

int cmd_normal_form(const Inputs& in) {
  const auto g = need_graph(in);
  const auto nf = raag::normal_form(g, need_word(in, g));
  emit(in, "normal_form.txt", raag::format_word(g, nf.word) + "\n");
  return 0;
}

int cmd_word_eq(const Inputs& in) {
  const auto g = need_graph(in);
  if (in.words.size() != 2) throw InputError("word-eq needs exactly two --word arguments");
  const auto a = raag::normal_form(g, need_word(in, g, 0)).word;
  const auto b = raag::normal_form(g, need_word(in, g, 1)).word;
  const bool equal = a == b;
  std::ostringstream out;
  out << (equal ? "equal" : "different") << "\n"
      << raag::format_word(g, a) << "\n"
      << raag::format_word(g, b) << "\n";
  emit(in, "word_eq.txt", out.str());
  return equal ? 0 : 1;
}

int cmd_double(const Inputs& in) {
  const auto g = need_graph(in);
  const auto d = graphs::double_graph(g);
  emit(in, "double.txt", graphs::format_graph(d));
  emit_extra(in, "diagonal.hom", raag::format_homomorphism(raag::hom_diagonal(g)));
  emit_extra(in, "retraction.hom", raag::format_homomorphism(raag::hom_retraction(g)));
  return 0;
}

int cmd_check_cover(const Inputs& in) {
  const auto g = need_graph(in);
  if (in.cover.empty()) throw InputError("--cover is required");
  const auto m = graphs::parse_morphism(read_file(in.cover), g);
  const auto r = graphs::check_orbicover(m);
  json j;
  int code = 1;
  if (auto* c = std::get_if<graphs::OrbicoverCertificate>(&r)) {
    j = certificate_json(m.source, g, *c);
    j["planar"] = graphs::is_planar(m.source);
    code = 0;
  } else if (auto* v = std::get_if<graphs::LocalSurjectivityViolation>(&r)) {
    j = {{"orbicover", false},
         {"vertex", m.source.name(v->vertex)},
         {"missing_edge", {g.name(v->missing_edge.first), g.name(v->missing_edge.second)}}};
  } else {
    j = {{"orbicover", false}, {"malformed", std::get<graphs::MalformedMorphism>(r).reason}};
  }
  emit(in, "cover_check.json", dump(j));
  return code;
}

int cmd_emulator(const Inputs& in) {
  const auto g = need_graph(in);
  graphs::EmulatorSearchOptions opts;
  opts.max_sheets = in.cfg.max_sheets;
  const auto r = graphs::find_planar_emulator(g, opts);
  if (auto* nf = std::get_if<graphs::EmulatorNotFound>(&r)) {
    const json j{{"found", false},
                 {"assignments_tried", nf->assignments_tried},
                 {"cap_reached", nf->cap_reached},
                 {"reason", nf->reason}};
    emit(in, "emulator.json", dump(j));
    if (nf->cap_reached) throw ResourceCapError("emulator search cap reached: " + nf->reason);
    return 1;
  }
  const auto& e = std::get<graphs::PlanarEmulator>(r);
  json voltages = json::array();
  for (const auto& v : e.voltages) voltages.push_back({{"order", v.group_order}, {"voltages", v.voltages}});
  json j{{"found", true},
         {"sheets", e.projection.source.vertex_count() / std::max<std::size_t>(1, g.vertex_count())},
         {"vertices", e.projection.source.vertex_count()},
         {"edges", e.projection.source.edge_count()},
         {"assignments_tried", e.assignments_tried},
         {"voltages", voltages},
         {"certificate", certificate_json(e.projection.source, g, e.certificate)},
         {"embedding", embedding_json(e.embedding)}};
  if (in.cfg.out) {
    write_atomic(*in.cfg.out / "cover.txt", graphs::format_morphism(e.projection));
    write_atomic(*in.cfg.out / "emulator.json", dump(j));
  } else {
    j["cover"] = graphs::format_morphism(e.projection);
    std::cout << dump(j);
  }
  return 0;
}

int cmd_certificate(const Inputs& in) {
  const auto g = need_graph(in);
  const auto r = graphs::certificate_no_emulator(g);
  json j;
  int code = 1;
  if (auto* c = std::get_if<graphs::NoEmulatorCertificate>(&r)) {
    j = {{"no_emulator", true},
         {"vertices", c->vertices},
         {"edges", c->edges},
         {"min_degree", c->min_degree},
         {"derivation", c->derivation}};
    code = 0;
  } else {
    j = {{"no_emulator", false}, {"reason", std::get<graphs::NotApplicable>(r).reason}};
  }
  emit(in, "certificate.json", dump(j));
  return code;
}

int cmd_build_config(const Inputs& in) {
  const auto rep = make_rep(in);
  emit(in, "configuration.json", dump(twist::to_json(rep.config)));
  emit_extra(in, "configuration.svg", twist::to_svg(rep.config));
  return 0;
}

int cmd_build_rep(const Inputs& in) {
  const auto rep = make_rep(in);
  emit(in, "representation.json", dump(representation_json(rep)));
  emit_extra(in, "configuration.svg", twist::to_svg(rep.config));
  return 0;
}

int cmd_simulate(const Inputs& in) {
  const auto rep = make_rep(in);
  const auto w = need_word(in, rep.artin_graph);
  // Marked points, then a grid over the square holding the configuration.
  std::vector<Point> pts = twist::default_marked_points(rep.config);
  const std::size_t n = in.cfg.grid;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = n == 1 ? 0.0 : -0.6 + 1.2 * static_cast<double>(i) / static_cast<double>(n - 1);
      const double y = n == 1 ? 0.0 : -0.6 + 1.2 * static_cast<double>(j) / static_cast<double>(n - 1);
      pts.emplace_back(x, y);
    }
  }
  const auto img = in.integrated ? dyn::rep_apply_integrated(rep, w, pts) : twist::rep_apply(rep, w, pts);
  std::ostringstream csv;
  csv << "index,x0,y0,x1,y1,displacement\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    csv << i << "," << num(pts[i].real()) << "," << num(pts[i].imag()) << "," << num(img[i].real()) << ","
        << num(img[i].imag()) << "," << num(std::abs(img[i] - pts[i])) << "\n";
  }
  emit(in, "simulate.csv", csv.str());
  std::vector<Point> moved;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (img[i] != pts[i]) moved.push_back(img[i]);
  }
  emit_extra(in, "simulate.svg", twist::to_svg(rep.config, moved));
  return 0;
}

int cmd_verify(const Inputs& in) {
  const auto rep = make_rep(in);
  dyn::VerifyOptions o;
  o.seed = in.cfg.seed;
  o.samples = in.cfg.samples;
  o.integrated = in.integrated;
  const auto r = dyn::verify_relations(rep, o);
  emit(in, "verify.json", dump(r.to_json()));
  return r.pass() ? 0 : 1;
}

int cmd_probe_faithful(const Inputs& in) {
  const auto rep = make_rep(in);
  dyn::ProbeOptions o;
  o.threshold = in.cfg.tol;
  const auto t = dyn::faithfulness_probe(rep, in.cfg.depth, twist::default_marked_points(rep.config),
                                         in.cfg.seed, o);
  emit(in, "faithfulness.csv", t.to_csv());
  emit_extra(in, "faithfulness.json", dump(t.to_json()));
  return 0;
}

int cmd_lambda_decay(const Inputs& in) {
  const auto els = schottky(in.cfg.depth);
  const auto H = hyper::assemble_Hv(0, els, hyper::default_lift_annulus());
  const auto rep = hyper::analytic_report(H);
  emit(in, "estimates.csv", rep.to_csv());
  emit_extra(in, "estimates.json", dump(rep.to_json()));
  // translated regions drawn inside the unit disk
  SvgWriter svg(-1.05, -1.05, 1.05, 1.05);
  svg.circle(Point(0.0, 0.0), 1.0, "black", 1.5);
  for (const auto& part : H.parts()) {
    svg.circle(part.outer_disk().center, part.outer_disk().radius, "steelblue", 0.6);
    svg.circle(part.inner_disk().center, part.inner_disk().radius, "steelblue", 0.4);
  }
  emit_extra(in, "estimates.svg", svg.str());
  return rep.lambda_decreasing ? 0 : 1;
}

int cmd_smooth_study(const Inputs& in) {
  const auto els = schottky(in.cfg.depth);
  auto H = std::make_shared<const hyper::AssembledHamiltonian>(
      hyper::assemble_Hv(0, els, hyper::default_lift_annulus()));
  const std::size_t n = std::max<std::size_t>(in.cfg.grid, 2);
  std::vector<Point> probe;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Point z(-0.9 + 1.8 * static_cast<double>(i) / static_cast<double>(n - 1),
                    -0.9 + 1.8 * static_cast<double>(j) / static_cast<double>(n - 1));
      if (std::abs(z) <= 0.9) probe.push_back(z);
    }
  }
  std::ostringstream csv;
  csv << "eps,sup_diff,eta_at_0,eta_at_half,eta_off_disk\n";
  json rows = json::array();
  bool decreasing = true;
  double previous = INFINITY;
  for (double eps : in.cfg.eps) {
    const auto f = hyper::smooth_Hv(H, eps);
    double sup = 0.0;
    for (const Point& z : probe) sup = std::max(sup, std::abs(f.value(z) - H->value(z)));
    const double e0 = hyper::mollifier(eps, 0.0), eh = hyper::mollifier(eps, 0.5),
                 eoff = hyper::mollifier(eps, Point(1.0, 0.0));
    decreasing = decreasing && sup < previous;
    previous = sup;
    csv << num(eps) << "," << num(sup) << "," << num(e0) << "," << num(eh) << "," << num(eoff) << "\n";
    rows.push_back({{"eps", eps}, {"sup_diff", sup}, {"eta_at_0", e0}, {"eta_at_half", eh}, {"eta_off_disk", eoff}});
  }
  emit(in, "smooth_study.csv", csv.str());
  emit_extra(in, "smooth_study.json",
             dump({{"depth", in.cfg.depth}, {"grid", n}, {"probe_points", probe.size()},
                   {"strictly_decreasing", decreasing}, {"rows", rows}}));
  return decreasing ? 0 : 1;
}

int cmd_polydisk(const Inputs& in) {
  // k is the twist hamiltonian of the first annulus of --graph's
  // configuration, or of a fixed annulus about the origin.
  twist::RoundAnnulus A{{0.0, 0.0}, 0.25, 0.45};
  if (!in.graph.empty()) A = make_rep(in).config.annuli.at(0);
  const auto k = twist::twist_hamiltonian(A, twist::standard_profile(A));
  std::mt19937_64 rng(in.cfg.seed);
  const auto slice = dyn::support_samples(A, in.cfg.samples >= 100 ? 100 : in.cfg.samples, rng);
  const double T = in.cfg.N;
  json reports = json::array();
  bool pass = true;
  for (std::size_t n : {2u, 3u}) {
    const auto h = dyn::polydisk_extend(k, n);
    const auto r = dyn::polydisk_slice_check(h, slice, T, 4000 * static_cast<std::size_t>(T), 8);
    pass = pass && r.gradient_gap <= in.cfg.tol && r.flow_gap <= 1e-5 && r.transverse_drift <= 1e-5;
    reports.push_back(r.to_json());
  }
  emit(in, "polydisk.json",
       dump({{"annulus", {{"center", point_json(A.center)}, {"r_inner", A.r_inner}, {"r_outer", A.r_outer}}},
             {"T", T},
             {"gradient_tol", in.cfg.tol},
             {"flow_tol", 1e-5},
             {"pass", pass},
             {"slices", reports}}));
  return pass ? 0 : 1;
}

}  // namespace raagham::cli
