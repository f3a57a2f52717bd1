#include "raagham/circle_packing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "raagham/errors.hpp"

namespace raagham::twist {

namespace {

using graphs::vid;

// Face walks of a straight-line drawing, each face on the left.
std::vector<std::vector<std::size_t>> face_walks(const graphs::PlanarEmbedding& e) {
  const auto& g = e.graph;
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> rot(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : g.neighbors(vid(v))) rot[v].push_back(w.value);
    std::sort(rot[v].begin(), rot[v].end(), [&](std::size_t a, std::size_t b) {
      return std::arg(e.positions[a] - e.positions[v]) < std::arg(e.positions[b] - e.positions[v]);
    });
  }
  auto next = [&](std::size_t u, std::size_t v) {
    const auto& r = rot[v];
    const auto it = std::find(r.begin(), r.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - r.begin());
    return r[(i + r.size() - 1) % r.size()];
  };
  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<std::vector<std::size_t>> walks;
  for (auto [a, b] : g.edges()) {
    for (auto [u0, v0] : {std::pair{a.value, b.value}, std::pair{b.value, a.value}}) {
      if (used.count({u0, v0})) continue;
      std::vector<std::size_t> walk;
      std::size_t u = u0, v = v0;
      do {
        used.insert({u, v});
        walk.push_back(u);
        const std::size_t w = next(u, v);
        u = v;
        v = w;
      } while (!(u == u0 && v == v0));
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

void orient_consistently(Triangulation& t) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_edge;
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    for (int k = 0; k < 3; ++k) {
      const std::size_t a = t.faces[f][k], b = t.faces[f][(k + 1) % 3];
      by_edge[{std::min(a, b), std::max(a, b)}].push_back(f);
    }
  }
  for (const auto& [edge, fs] : by_edge) {
    if (fs.size() != 2) throw ConstructionError("completion is not a closed surface");
  }
  auto has_directed = [&](std::size_t f, std::size_t a, std::size_t b) {
    for (int k = 0; k < 3; ++k)
      if (t.faces[f][k] == a && t.faces[f][(k + 1) % 3] == b) return true;
    return false;
  };
  std::vector<int> state(t.faces.size(), 0);
  std::deque<std::size_t> queue{0};
  state[0] = 1;
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (int k = 0; k < 3; ++k) {
      const std::size_t a = t.faces[f][k], b = t.faces[f][(k + 1) % 3];
      for (std::size_t h : by_edge[{std::min(a, b), std::max(a, b)}]) {
        if (h == f) continue;
        const bool same_dir = has_directed(h, a, b);
        if (state[h] == 0) {
          if (same_dir) std::swap(t.faces[h][1], t.faces[h][2]);
          state[h] = 1;
          queue.push_back(h);
        } else if (same_dir) {
          throw ConstructionError("completion is not orientable");
        }
      }
    }
  }
}

double corner_angle(double rv, double ra, double rb) {
  const double x = ra * rb / ((rv + ra) * (rv + rb));
  return 2.0 * std::asin(std::sqrt(std::min(1.0, x)));
}

Point third_center(Point p, Point q, double rp, double rq, double rz, bool left) {
  const double a = rp + rz, b = rq + rz, d = std::abs(q - p);
  const double c = std::clamp((a * a + d * d - b * b) / (2 * a * d), -1.0, 1.0);
  const double alpha = std::acos(c) * (left ? 1.0 : -1.0);
  return p + a * (q - p) / d * std::polar(1.0, alpha);
}

// Places the circles face by face; true when the layout validates.
bool layout(const Triangulation& t, std::size_t outer_face, Packing& p) {
  const std::size_t n = t.vertex_count;
  for (bool left : {true, false}) {
    p.centers.assign(n, Point(0, 0));
    std::vector<bool> placed(n, false);
    const auto& outer = t.faces[outer_face];
    const std::size_t a = outer[0], b = outer[1];
    p.centers[a] = Point(0, 0);
    p.centers[b] = Point(p.radii[a] + p.radii[b], 0);
    placed[a] = placed[b] = true;
    bool progress = true;
    std::vector<bool> done(t.faces.size(), false);
    done[outer_face] = true;
    while (progress) {
      progress = false;
      for (std::size_t f = 0; f < t.faces.size(); ++f) {
        if (done[f]) continue;
        const auto& tri = t.faces[f];
        for (int k = 0; k < 3; ++k) {
          const std::size_t x = tri[k], y = tri[(k + 1) % 3], z = tri[(k + 2) % 3];
          if (placed[x] && placed[y]) {
            if (!placed[z]) {
              p.centers[z] = third_center(p.centers[x], p.centers[y], p.radii[x], p.radii[y],
                                          p.radii[z], left);
              placed[z] = true;
            }
            done[f] = true;
            progress = true;
            break;
          }
        }
      }
    }
    if (std::find(placed.begin(), placed.end(), false) != placed.end()) {
      throw ConstructionError("packing layout did not reach every circle");
    }
    const auto q = packing_quality(t, p, n);
    if (q.max_tangency_error < 1e-6 && q.min_gap > 0) return true;
  }
  return false;
}

}  // namespace

Triangulation complete_triangulation(const graphs::PlanarEmbedding& e) {
  const std::size_t n = e.graph.vertex_count();
  if (n < 2 || !graphs::is_connected(e.graph)) {
    throw ConstructionError("triangulation completion needs a connected graph on >= 2 vertices");
  }
  Triangulation t;
  t.original = n;
  std::size_t next_id = n;
  for (const auto& walk : face_walks(e)) {
    const std::size_t k = walk.size();
    std::vector<std::size_t> side(k), corner(k);
    for (std::size_t i = 0; i < k; ++i) side[i] = next_id++;
    for (std::size_t i = 0; i < k; ++i) corner[i] = next_id++;
    const std::size_t hub = next_id++;
    t.hubs.push_back(hub);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = (i + 1) % k;
      const std::size_t ci = walk[i], cj = walk[j];
      t.faces.push_back({ci, cj, side[i]});
      t.faces.push_back({cj, corner[j], side[i]});
      t.faces.push_back({cj, side[j], corner[j]});
      t.faces.push_back({side[i], corner[j], hub});
      t.faces.push_back({corner[j], side[j], hub});
    }
  }
  t.vertex_count = next_id;
  orient_consistently(t);
  // Euler characteristic of the sphere.
  const long long v = static_cast<long long>(t.vertex_count);
  const long long f = static_cast<long long>(t.faces.size());
  if (v - 3 * f / 2 + f != 2) throw ConstructionError("completion is not a sphere");
  return t;
}

Packing pack_triangulation(const Triangulation& t, std::size_t outer_face,
                           const PackingOptions& opts) {
  const std::size_t n = t.vertex_count;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> flower(n);
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    if (f == outer_face) continue;
    const auto& tri = t.faces[f];
    for (int k = 0; k < 3; ++k) flower[tri[k]].emplace_back(tri[(k + 1) % 3], tri[(k + 2) % 3]);
  }
  std::vector<bool> boundary(n, false);
  for (std::size_t x : t.faces.at(outer_face)) boundary[x] = true;

  Packing p;
  p.radii.assign(n, 1.0);
  auto angle_sum = [&](std::size_t v) {
    double s = 0;
    for (auto [a, b] : flower[v]) s += corner_angle(p.radii[v], p.radii[a], p.radii[b]);
    return s;
  };
  // Angle sums are first driven below the requested tolerance; when the
  // layout then fails validation (errors accumulate along the placement
  // order), the relaxation continues at a tighter tolerance.
  double err = 0;
  std::size_t iterations = 0;
  for (double tol = opts.tolerance; tol >= 1e-15; tol /= 100) {
    for (; iterations < opts.max_iterations; ++iterations) {
      err = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (boundary[v]) continue;
        err = std::max(err, std::abs(angle_sum(v) - kTwoPi));
      }
      if (err < tol) break;
      for (std::size_t v = 0; v < n; ++v) {
        if (boundary[v]) continue;
        const double k = static_cast<double>(flower[v].size());
        const double beta = std::sin(angle_sum(v) / (2 * k));
        const double delta = std::sin(kPi / k);
        const double rhat = p.radii[v] * beta / (1 - beta);
        p.radii[v] = rhat * (1 - delta) / delta;
      }
    }
    p.iterations = iterations;
    p.max_angle_error = err;
    if (err >= tol) {
      if (tol == opts.tolerance) throw ConstructionError("circle packing did not converge");
      break;
    }
    if (layout(t, outer_face, p)) return p;
  }
  throw ConstructionError("packing layout failed tangency/disjointness validation");
}

void invert_circle(Point z0, Point& c, double& r) {
  const Point d = c - z0;
  const double k = std::norm(d) - r * r;
  c = std::conj(d) / k;
  r = r / std::abs(k);
}

PackingQuality packing_quality(const Triangulation& t, const Packing& p, std::size_t count) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& f : t.faces)
    for (int k = 0; k < 3; ++k) {
      const std::size_t a = f[k], b = f[(k + 1) % 3];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  PackingQuality q;
  q.min_gap = INFINITY;
  for (auto [a, b] : edges) {
    if (a >= count || b >= count) continue;
    const double s = p.radii[a] + p.radii[b];
    q.max_tangency_error = std::max(q.max_tangency_error, std::abs(std::abs(p.centers[a] - p.centers[b]) - s) / s);
  }
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b) {
      if (edges.count({a, b})) continue;
      const double s = p.radii[a] + p.radii[b];
      q.min_gap = std::min(q.min_gap, (std::abs(p.centers[a] - p.centers[b]) - s) / s);
    }
  return q;
}

}  // namespace raagham::twist
