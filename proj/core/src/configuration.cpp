#include "raagham/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "raagham/errors.hpp"
#include "raagham/svg.hpp"

namespace raagham::twist {

namespace {

using graphs::SimplicialGraph;
using graphs::vid;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Layout {
  std::vector<Point> centers;
  std::vector<double> radii;
  std::size_t iterations = 0;
  double error = 0.0;
};

// Tangency packing of one connected component, normalised to a unit box.
Layout pack_component(const graphs::PlanarEmbedding& full, const std::vector<graphs::VertexId>& comp,
                      const PackingOptions& opts) {
  Layout out;
  if (comp.size() == 1) {
    out.centers = {Point(0.5, 0.5)};
    out.radii = {0.5};
    return out;
  }
  std::vector<std::string> names;
  std::vector<std::size_t> local(full.graph.vertex_count(), SIZE_MAX);
  std::vector<Point> pos;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    local[comp[i].value] = i;
    names.push_back(full.graph.name(comp[i]));
    pos.push_back(full.positions[comp[i].value]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [u, v] : full.graph.edges())
    if (local[u.value] != SIZE_MAX && local[v.value] != SIZE_MAX)
      edges.emplace_back(local[u.value], local[v.value]);
  const graphs::PlanarEmbedding sub{SimplicialGraph(names, edges), pos};
  const Triangulation t = complete_triangulation(sub);
  // Face 3 is (side, corner, hub) of the first face walk: all dummies.
  const Packing p = pack_triangulation(t, 3, opts);
  out.iterations = p.iterations;
  out.error = p.max_angle_error;
  // Moving a face to infinity is a Moebius change of the packing; pick the
  // face hub that best balances the radii of the graph circles.
  std::vector<Point> cs(p.centers.begin(), p.centers.begin() + comp.size());
  std::vector<double> rs(p.radii.begin(), p.radii.begin() + comp.size());
  auto balance = [](const std::vector<double>& r) {
    return *std::min_element(r.begin(), r.end()) / *std::max_element(r.begin(), r.end());
  };
  double best = balance(rs);
  const std::vector<Point> c0 = cs;
  const std::vector<double> r0 = rs;
  for (std::size_t hub : t.hubs) {
    std::vector<Point> c2 = c0;
    std::vector<double> r2 = r0;
    for (std::size_t i = 0; i < c2.size(); ++i) invert_circle(p.centers[hub], c2[i], r2[i]);
    if (balance(r2) > best) {
      best = balance(r2);
      cs = std::move(c2);
      rs = std::move(r2);
    }
  }
  double xmin = kInf, ymin = kInf, xmax = -kInf, ymax = -kInf;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    xmin = std::min(xmin, cs[i].real() - rs[i]);
    xmax = std::max(xmax, cs[i].real() + rs[i]);
    ymin = std::min(ymin, cs[i].imag() - rs[i]);
    ymax = std::max(ymax, cs[i].imag() + rs[i]);
  }
  const double s = 1.0 / std::max(xmax - xmin, ymax - ymin);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    out.centers.push_back((cs[i] - Point(xmin, ymin)) * s);
    out.radii.push_back(rs[i] * s);
  }
  return out;
}

bool inflation_ok(const SimplicialGraph& g, const std::vector<Point>& c, const std::vector<double>& r,
                  double delta) {
  const std::size_t n = g.vertex_count();
  const double f = 1.0 + delta;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = std::abs(c[a] - c[b]);
      const double ra = r[a] * f, rb = r[b] * f;
      if (g.adjacent(vid(a), vid(b))) {
        if (!(d < ra + rb && d > std::abs(ra - rb))) return false;
      } else {
        const double gap0 = d - r[a] - r[b];
        if (d - ra - rb < 0.5 * gap0) return false;
      }
    }
  }
  for (auto [u, v] : g.edges())
    for (auto w : g.neighbors(u))
      if (w > v && g.adjacent(v, w) &&
          discs_share_point(c[u.value], r[u.value] * f, c[v.value], r[v.value] * f, c[w.value],
                            r[w.value] * f))
        return false;
  return true;
}

double crossing_sine(Point x, Point c1, Point c2) {
  const Point n1 = (x - c1) / std::abs(x - c1), n2 = (x - c2) / std::abs(x - c2);
  return std::abs(cross(n1, n2));
}

// Distance from p to the closed annulus (0 inside).
double annulus_distance(const RoundAnnulus& a, Point p) {
  const double rho = std::abs(p - a.center);
  return std::max({0.0, a.r_inner - rho, rho - a.r_outer});
}

bool in_any_annulus(const std::vector<RoundAnnulus>& as, Point p, std::size_t skip = SIZE_MAX) {
  for (std::size_t i = 0; i < as.size(); ++i)
    if (i != skip && as[i].contains_closed(p)) return true;
  return false;
}

struct FloodResult {
  std::size_t components = 0;
  std::vector<Point> points;  // two per component
};

struct Run {
  double x0, x1;
  std::size_t row;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Scanline flood fill of the complement of the closed annuli inside the
// square [-half, half]^2. Rows are sampled at `rows` heights; along a row the
// free set is computed exactly as a union of intervals. Runs in consecutive
// rows are joined when their x-ranges overlap.
FloodResult flood(const std::vector<RoundAnnulus>& as, double half, std::size_t rows) {
  const double h = 2 * half / static_cast<double>(rows);
  std::vector<Run> runs;
  std::vector<std::size_t> row_start(rows + 1, 0);
  std::vector<std::pair<double, double>> blocked;
  for (std::size_t j = 0; j < rows; ++j) {
    row_start[j] = runs.size();
    const double y = -half + (static_cast<double>(j) + 0.5) * h;
    blocked.clear();
    for (const auto& a : as) {
      const double dy = y - a.center.imag();
      const double ro2 = a.r_outer * a.r_outer - dy * dy;
      if (ro2 < 0) continue;
      const double so = std::sqrt(ro2);
      const double ri2 = a.r_inner * a.r_inner - dy * dy;
      const double cx = a.center.real();
      if (ri2 <= 0) {
        blocked.emplace_back(cx - so, cx + so);
      } else {
        const double si = std::sqrt(ri2);
        blocked.emplace_back(cx - so, cx - si);
        blocked.emplace_back(cx + si, cx + so);
      }
    }
    std::sort(blocked.begin(), blocked.end());
    double cursor = -half;
    for (const auto& [b0, b1] : blocked) {
      if (b0 > cursor) runs.push_back({cursor, std::min(b0, half), j});
      cursor = std::max(cursor, b1);
      if (cursor >= half) break;
    }
    if (cursor < half) runs.push_back({cursor, half, j});
  }
  row_start[rows] = runs.size();

  std::vector<std::size_t> parent(runs.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  for (std::size_t j = 0; j + 1 < rows; ++j) {
    std::size_t a = row_start[j], b = row_start[j + 1];
    const std::size_t ae = row_start[j + 1], be = row_start[j + 2];
    while (a < ae && b < be) {
      if (std::min(runs[a].x1, runs[b].x1) > std::max(runs[a].x0, runs[b].x0)) {
        parent[find_root(parent, a)] = find_root(parent, b);
      }
      (runs[a].x1 < runs[b].x1) ? ++a : ++b;
    }
  }

  // Candidate points: a few samples per run, scored by clearance.
  auto clearance = [&](Point p) {
    double c = std::min(half - std::abs(p.real()), half - std::abs(p.imag()));
    for (const auto& a : as) c = std::min(c, annulus_distance(a, p));
    return c;
  };
  auto samples = [&](const Run& r, auto&& visit) {
    const double y = -half + (static_cast<double>(r.row) + 0.5) * h;
    constexpr int k = 7;
    for (int i = 0; i < k; ++i) visit(Point(r.x0 + (r.x1 - r.x0) * (i + 0.5) / k, y));
  };
  std::map<std::size_t, std::pair<Point, double>> first;  // root -> best point
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::size_t root = find_root(parent, i);
    samples(runs[i], [&](Point p) {
      const double c = clearance(p);
      auto it = first.find(root);
      if (it == first.end() || c > it->second.second) first[root] = {p, c};
    });
  }
  std::map<std::size_t, std::pair<Point, double>> second;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::size_t root = find_root(parent, i);
    const auto& [p1, c1] = first[root];
    if (c1 < 2 * h) continue;
    samples(runs[i], [&](Point p) {
      const double sc = std::min(clearance(p), std::abs(p - p1));
      auto it = second.find(root);
      if (it == second.end() || sc > it->second.second) second[root] = {p, sc};
    });
  }
  // Components ordered by their first run (bottom-left first).
  std::vector<std::size_t> order;
  std::set<std::size_t> seen;
  FloodResult out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::size_t root = find_root(parent, i);
    if (!seen.insert(root).second) continue;
    // Slivers at the corners of overlap regions can be cut off by the row
    // sampling; a genuine component has a point two rows clear of every
    // annulus.
    if (first[root].second < 2 * h) continue;
    out.points.push_back(first[root].first);
    out.points.push_back(second[root].first);
    ++out.components;
  }
  return out;
}

std::vector<double> choose_widths(const Configuration& c) {
  const auto& g = c.graph;
  const std::size_t n = g.vertex_count();
  std::vector<double> bound(n, kInf);
  for (std::size_t v = 0; v < n; ++v) bound[v] = c.radii[v] / 2.0;
  std::vector<std::vector<Point>> on_circle(n);
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t u = edges[e].first.value, v = edges[e].second.value;
    const auto& x = c.crossings[e];
    const double sep = std::abs(x[0] - x[1]);
    const double sn = crossing_sine(x[0], c.centers[u], c.centers[v]);
    // Depth of the lens B(u) n B(v) along the centre line.
    const double depth = c.radii[u] + c.radii[v] - std::abs(c.centers[u] - c.centers[v]);
    for (std::size_t w : {u, v}) {
      bound[w] = std::min({bound[w], sep * sn / 2.0, depth / 2.0});
      on_circle[w].push_back(x[0]);
      on_circle[w].push_back(x[1]);
    }
    for (const Point& p : x) {
      for (std::size_t w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const double dist = std::abs(std::abs(p - c.centers[w]) - c.radii[w]);
        bound[u] = std::min(bound[u], dist);
        bound[v] = std::min(bound[v], dist);
        bound[w] = std::min(bound[w], dist);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto& pts = on_circle[v];
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        bound[v] = std::min(bound[v], std::abs(pts[i] - pts[j]));
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v || g.adjacent(vid(v), vid(w))) continue;
      const double gap = std::abs(c.centers[v] - c.centers[w]) - c.radii[v] - c.radii[w];
      bound[v] = std::min(bound[v], gap / 2.0);
    }
  }
  for (double& b : bound) b /= 4.0;
  return bound;
}

std::array<Point, 2> p1_points(const Configuration& c, std::size_t v) {
  constexpr std::size_t kSamples = 4096;
  std::vector<bool> free(kSamples);
  for (std::size_t j = 0; j < kSamples; ++j) {
    const Point p = c.centers[v] + std::polar(c.radii[v], kTwoPi * j / kSamples);
    free[j] = !in_any_annulus(c.annuli, p, v);
  }
  std::size_t best_start = 0, best_len = 0;
  if (std::all_of(free.begin(), free.end(), [](bool b) { return b; })) {
    best_len = kSamples;
  } else {
    for (std::size_t s = 0; s < kSamples; ++s) {
      if (!free[s] || free[(s + kSamples - 1) % kSamples]) continue;
      std::size_t len = 0;
      while (len < kSamples && free[(s + len) % kSamples]) ++len;
      if (len > best_len) {
        best_len = len;
        best_start = s;
      }
    }
  }
  if (best_len < 3) throw ConstructionError("no free arc on circle " + c.graph.names()[v]);
  std::array<Point, 2> out;
  for (int k = 0; k < 2; ++k) {
    const double j = static_cast<double>(best_start) + best_len * (k + 1) / 3.0;
    out[k] = c.centers[v] + std::polar(c.radii[v], kTwoPi * j / kSamples);
  }
  return out;
}

}  // namespace

std::vector<Point> Configuration::punctures() const {
  std::vector<Point> out;
  for (const auto& pr : p1) out.insert(out.end(), pr.begin(), pr.end());
  out.insert(out.end(), p2.begin(), p2.end());
  out.push_back(q);
  return out;
}

bool annuli_intersect(const RoundAnnulus& a, const RoundAnnulus& b) {
  const double d = std::abs(a.center - b.center);
  const double lo = std::max({a.r_inner, d - b.r_outer, b.r_inner - d});
  const double hi = std::min(a.r_outer, d + b.r_outer);
  return lo < hi;
}

std::array<Point, 2> circle_intersections(Point c1, double r1, Point c2, double r2) {
  const double d = std::abs(c2 - c1);
  const double x = (d * d + r1 * r1 - r2 * r2) / (2 * d);
  const double y = std::sqrt(std::max(0.0, r1 * r1 - x * x));
  const Point u = (c2 - c1) / d;
  const Point base = c1 + x * u;
  const Point perp = u * Point(0, 1);
  return {base + y * perp, base - y * perp};
}

bool discs_share_point(Point c1, double r1, Point c2, double r2, Point c3, double r3) {
  const Point c[3] = {c1, c2, c3};
  const double r[3] = {r1, r2, r3};
  auto inside = [&](Point p, int k) { return std::abs(p - c[k]) <= r[k] * (1 + 1e-12); };
  auto contained = [&](int i, int j) { return std::abs(c[i] - c[j]) + r[i] <= r[j]; };
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    if (contained(i, j) && contained(i, k)) return true;
    const double d = std::abs(c[i] - c[j]);
    if (d < r[i] + r[j] && d > std::abs(r[i] - r[j])) {
      for (const Point& p : circle_intersections(c[i], r[i], c[j], r[j]))
        if (inside(p, k)) return true;
    }
  }
  return false;
}

graphs::SimplicialGraph annulus_nerve(const Configuration& c) {
  const std::size_t n = c.annuli.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      m[a][b] = m[b][a] = annuli_intersect(c.annuli[a], c.annuli[b]);
  return graphs::incidence_nerve(c.graph.names(), m);
}

Configuration build_configuration(const graphs::PlanarEmbedding& e, const ConfigurationOptions& opts) {
  const auto& g = e.graph;
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("configuration needs at least one vertex");
  if (graphs::count_crossings(e) != 0) throw InputError("embedding has crossing edges");

  Configuration c;
  c.graph = g;
  c.centers.resize(n);
  c.radii.resize(n);
  double x_offset = 0;
  for (const auto& comp : graphs::connected_components(g)) {
    const Layout l = pack_component(e, comp, opts.packing);
    c.packing_iterations = std::max(c.packing_iterations, l.iterations);
    c.packing_error = std::max(c.packing_error, l.error);
    double width = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      c.centers[comp[i].value] = l.centers[i] + Point(x_offset, 0);
      c.radii[comp[i].value] = l.radii[i];
      width = std::max(width, l.centers[i].real() + l.radii[i]);
    }
    x_offset += width + 0.5;
  }
  // Centre and scale so that inflated circles stay well inside fit_radius.
  double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
  for (std::size_t v = 0; v < n; ++v) {
    xmin = std::min(xmin, c.centers[v].real() - c.radii[v]);
    xmax = std::max(xmax, c.centers[v].real() + c.radii[v]);
    ymin = std::min(ymin, c.centers[v].imag() - c.radii[v]);
    ymax = std::max(ymax, c.centers[v].imag() + c.radii[v]);
  }
  const Point mid((xmin + xmax) / 2, (ymin + ymax) / 2);
  double extent = 0;
  for (std::size_t v = 0; v < n; ++v) extent = std::max(extent, std::abs(c.centers[v] - mid) + c.radii[v]);
  const double s = 0.7 * opts.fit_radius / (extent * (1 + opts.max_inflation));
  for (std::size_t v = 0; v < n; ++v) {
    c.centers[v] = (c.centers[v] - mid) * s;
    c.radii[v] *= s;
  }

  // Inflation: largest delta <= max_inflation keeping the crossing pattern.
  double lo = 0, hi = opts.max_inflation;
  if (inflation_ok(g, c.centers, c.radii, hi)) {
    lo = hi;
  } else {
    for (int it = 0; it < 60; ++it) {
      const double m = (lo + hi) / 2;
      (inflation_ok(g, c.centers, c.radii, m) ? lo : hi) = m;
    }
  }
  if (!(lo > 0) && g.edge_count() > 0) throw ConstructionError("no admissible inflation factor");
  c.inflation_max = lo;
  c.inflation = lo / 2;
  for (double& r : c.radii) r *= 1 + c.inflation;

  for (auto [u, v] : g.edges()) {
    c.crossings.push_back(circle_intersections(c.centers[u.value], c.radii[u.value],
                                               c.centers[v.value], c.radii[v.value]));
  }

  c.widths = choose_widths(c);
  for (int attempt = 0;; ++attempt) {
    c.annuli.clear();
    for (std::size_t v = 0; v < n; ++v)
      c.annuli.push_back(annulus_around(c.centers[v], c.radii[v], c.widths[v]));
    bool ok = annulus_nerve(c) == g;
    for (auto [u, v] : g.edges()) {
      for (auto w : g.neighbors(u)) {
        if (!(w > v && g.adjacent(v, w))) continue;
        const auto &A = c.annuli[u.value], &B = c.annuli[v.value], &C = c.annuli[w.value];
        if (discs_share_point(A.center, A.r_outer, B.center, B.r_outer, C.center, C.r_outer)) ok = false;
      }
    }
    if (ok) break;
    if (attempt == 30) throw ConstructionError("annulus widths could not preserve the nerve");
    for (double& w : c.widths) w /= 2;
  }
  for (std::size_t v = 0; v < n; ++v) c.widths[v] = AreaChart(c.annuli[v]).half_width();

  for (std::size_t v = 0; v < n; ++v) c.p1.push_back(p1_points(c, v));

  const std::size_t expected = graphs::connected_components(g).size() + 2 * g.edge_count() + 1;
  double thinnest = kInf;
  for (const auto& a : c.annuli) thinnest = std::min(thinnest, a.r_outer - a.r_inner);
  std::size_t start = opts.grid;
  while (start < opts.max_grid && 2 * opts.fit_radius / static_cast<double>(start) > thinnest / 8) start *= 2;
  for (std::size_t grid = start;; grid *= 2) {
    const FloodResult f = flood(c.annuli, opts.fit_radius, grid);
    if (f.components == expected) {
      c.grid_used = grid;
      c.complementary_components = f.components;
      c.p2 = f.points;
      break;
    }
    if (grid * 2 > opts.max_grid) {
      throw ConstructionError("flood fill found " + std::to_string(f.components) +
                              " complementary components, expected " + std::to_string(expected));
    }
  }

  double reach = 0;
  for (std::size_t v = 0; v < n; ++v) reach = std::max(reach, std::abs(c.centers[v]) + c.annuli[v].r_outer);
  const double r_free = (reach + opts.fit_radius) / 2;
  c.q = Point(0, -r_free);
  c.basepoint = Point(0, r_free);
  return c;
}

std::vector<std::string> validate_configuration(const Configuration& c) {
  std::vector<std::string> bad;
  const auto& g = c.graph;
  const std::size_t n = g.vertex_count();
  auto name = [&](std::size_t v) { return g.names()[v]; };
  if (!(annulus_nerve(c) == g)) bad.push_back("annulus nerve differs from the graph");
  if (!graphs::isomorphic(annulus_nerve(c), g)) bad.push_back("annulus nerve not isomorphic to the graph");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = std::abs(c.centers[a] - c.centers[b]);
      const bool adj = g.adjacent(vid(a), vid(b));
      const bool meet = d < c.radii[a] + c.radii[b];
      if (adj != meet) bad.push_back("disks " + name(a) + "," + name(b) + " violate the incidence rule");
      if (adj && !(d > std::abs(c.radii[a] - c.radii[b])))
        bad.push_back("circles " + name(a) + "," + name(b) + " do not cross in two points");
    }
  }
  for (auto [u, v] : g.edges())
    for (auto w : g.neighbors(u)) {
      if (!(w > v && g.adjacent(v, w))) continue;
      const auto &A = c.annuli[u.value], &B = c.annuli[v.value], &C = c.annuli[w.value];
      if (discs_share_point(A.center, A.r_outer, B.center, B.r_outer, C.center, C.r_outer))
        bad.push_back("triple intersection at " + name(u.value) + "," + name(v.value) + "," +
                      name(w.value));
    }
  for (std::size_t v = 0; v < n; ++v) {
    for (const Point& p : c.p1[v]) {
      if (std::abs(std::abs(p - c.centers[v]) - c.radii[v]) > 1e-12)
        bad.push_back("P_" + name(v) + " point off its circle");
      if (in_any_annulus(c.annuli, p, v)) bad.push_back("P_" + name(v) + " point inside another annulus");
    }
  }
  if (c.p2.size() != 2 * c.complementary_components) bad.push_back("P2 needs two points per component");
  for (const Point& p : c.p2)
    if (in_any_annulus(c.annuli, p)) bad.push_back("P2 point inside an annulus");
  for (std::size_t v = 0; v < n; ++v) {
    if (std::abs(c.q - c.centers[v]) <= c.annuli[v].r_outer) bad.push_back("q meets a disk or annulus");
    if (std::abs(c.basepoint - c.centers[v]) <= c.annuli[v].r_outer)
      bad.push_back("basepoint meets a disk or annulus");
  }
  return bad;
}

std::vector<std::vector<Point>> overlap_probe_points(const Configuration& c, std::size_t per_edge) {
  std::vector<std::vector<Point>> out;
  const auto& edges = c.graph.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t u = edges[e].first.value, v = edges[e].second.value;
    const auto &A = c.annuli[u], &B = c.annuli[v];
    const double hu = std::min(c.radii[u] - A.r_inner, A.r_outer - c.radii[u]);
    const double hv = std::min(c.radii[v] - B.r_inner, B.r_outer - c.radii[v]);
    std::vector<Point> pts;
    for (const Point& x : c.crossings[e]) {
      for (std::size_t k = 0; k < per_edge; ++k) {
        const double su = (k & 1) ? 0.45 : -0.45, sv = (k & 2) ? 0.45 : -0.45;
        const auto cand = circle_intersections(A.center, c.radii[u] + su * hu, B.center,
                                               c.radii[v] + sv * hv);
        pts.push_back(std::abs(cand[0] - x) < std::abs(cand[1] - x) ? cand[0] : cand[1]);
      }
    }
    out.push_back(std::move(pts));
  }
  return out;
}

std::vector<Point> default_marked_points(const Configuration& c, std::size_t per_circle) {
  std::vector<Point> out;
  const std::size_t n = c.graph.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    const AreaChart chart(c.annuli[v]);
    const double a = chart.half_width();
    for (std::size_t k = 0; k < per_circle; ++k) {
      const double t = (k % 2 == 0) ? a / 2 : -a / 2;
      out.push_back(chart.from_product({kTwoPi * (k + 0.5) / per_circle, t}));
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const double eps = 0.25 * (c.annuli[v].r_outer - c.radii[v]);
    for (const Point& p : c.p1[v])
      for (int k = 0; k < 4; ++k) out.push_back(p + std::polar(eps, kPi / 4 + k * kPi / 2));
  }
  for (const auto& pts : overlap_probe_points(c, 4)) out.insert(out.end(), pts.begin(), pts.end());
  return out;
}

nlohmann::json to_json(const Configuration& c) {
  using nlohmann::json;
  auto pt = [](Point p) { return json::array({p.real(), p.imag()}); };
  json j;
  j["vertices"] = c.graph.names();
  json edges = json::array();
  for (auto [u, v] : c.graph.edges()) edges.push_back({c.graph.name(u), c.graph.name(v)});
  j["edges"] = edges;
  json circles = json::array();
  for (std::size_t v = 0; v < c.centers.size(); ++v) {
    circles.push_back({{"vertex", c.graph.names()[v]},
                       {"center", pt(c.centers[v])},
                       {"radius", c.radii[v]},
                       {"annulus", {{"r_inner", c.annuli[v].r_inner}, {"r_outer", c.annuli[v].r_outer}}},
                       {"chart_half_width", c.widths[v]},
                       {"p1", json::array({pt(c.p1[v][0]), pt(c.p1[v][1])})}});
  }
  j["circles"] = circles;
  json p2 = json::array();
  for (const Point& p : c.p2) p2.push_back(pt(p));
  j["p2"] = p2;
  j["q"] = pt(c.q);
  j["basepoint"] = pt(c.basepoint);
  json nerve = json::array();
  const auto ng = annulus_nerve(c);
  for (auto [u, v] : ng.edges()) nerve.push_back({ng.name(u), ng.name(v)});
  j["nerve"] = nerve;
  j["provenance"] = {{"inflation_delta", c.inflation},
                     {"inflation_delta_max", c.inflation_max},
                     {"width_rule", "quarter of min(crossing clearance, half gap to non-adjacent circles)"},
                     {"grid", c.grid_used},
                     {"complementary_components", c.complementary_components},
                     {"packing_iterations", c.packing_iterations},
                     {"packing_angle_error", c.packing_error}};
  return j;
}

std::string to_svg(const Configuration& c, const std::vector<Point>& extra) {
  SvgWriter svg(-0.55, -0.55, 0.55, 0.55);
  svg.circle(Point(0, 0), 0.5, "#cccccc", 1.0);
  for (std::size_t v = 0; v < c.annuli.size(); ++v) {
    svg.ring(c.annuli[v].center, c.annuli[v].r_inner, c.annuli[v].r_outer, "#4a7ab5", 0.35);
    svg.circle(c.centers[v], c.radii[v], "#1d3d66", 0.8);
    svg.text(c.centers[v] + Point(0, c.radii[v]), c.graph.names()[v]);
  }
  for (const auto& pr : c.p1)
    for (const Point& p : pr) svg.dot(p, "#c0392b");
  for (const Point& p : c.p2) svg.dot(p, "#27ae60");
  svg.dot(c.q, "#8e44ad", 3.5);
  svg.dot(c.basepoint, "#000000", 3.5);
  for (const Point& p : extra) svg.dot(p, "#e67e22", 1.5);
  return svg.str();
}

}  // namespace raagham::twist
