#include "raagham/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "raagham/errors.hpp"

namespace raagham::graphs {

SimplicialGraph::SimplicialGraph(std::vector<std::string> names,
                                 std::span<const std::pair<std::size_t, std::size_t>> edges)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (names_[i].empty()) throw InputError("empty vertex name");
    if (!index_.emplace(names_[i], static_cast<std::uint32_t>(i)).second) {
      throw InputError("duplicate vertex name '" + names_[i] + "'");
    }
  }
  adjacency_.resize(n);
  matrix_.assign(n * n, 0);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("loop at vertex '" + names_[a] + "'");
    if (a > b) std::swap(a, b);
    if (matrix_[a * n + b]) {
      throw InputError("repeated edge " + names_[a] + " " + names_[b]);
    }
    matrix_[a * n + b] = matrix_[b * n + a] = 1;
    edges_.emplace_back(vid(a), vid(b));
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u.value].push_back(v);
    adjacency_[v.value].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

SimplicialGraph SimplicialGraph::from_names(
    std::vector<std::string> names,
    std::span<const std::pair<std::string, std::string>> edges) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  e.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end()) {
      throw InputError("edge references unknown vertex: " + a + " " + b);
    }
    e.emplace_back(ia->second, ib->second);
  }
  return SimplicialGraph(std::move(names), e);
}

std::optional<VertexId> SimplicialGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return VertexId{it->second};
}

VertexId SimplicialGraph::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::size_t SimplicialGraph::min_degree() const {
  std::size_t m = names_.empty() ? 0 : adjacency_[0].size();
  for (const auto& nb : adjacency_) m = std::min(m, nb.size());
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> SimplicialGraph::edge_indices() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_) out.emplace_back(u.value, v.value);
  return out;
}

namespace {

std::vector<std::string> numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

}  // namespace

SimplicialGraph complete_graph(std::size_t n, std::string_view prefix) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return SimplicialGraph(numbered(n, prefix), e);
}

SimplicialGraph cycle_graph(std::size_t n, std::string_view prefix) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimplicialGraph(numbered(n, prefix), e);
}

SimplicialGraph path_graph(std::size_t n, std::string_view prefix) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimplicialGraph(numbered(n, prefix), e);
}

SimplicialGraph empty_graph(std::size_t n, std::string_view prefix) {
  return SimplicialGraph(numbered(n, prefix), {});
}

SimplicialGraph torus_triangulation(std::size_t rows, std::size_t cols) {
  if (rows < 3 || cols < 3) throw InputError("torus triangulation needs rows, cols >= 3");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      names.push_back("t" + std::to_string(i) + "_" + std::to_string(j));
  auto at = [&](std::size_t i, std::size_t j) { return (i % rows) * cols + (j % cols); };
  std::set<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t a = at(i, j);
      for (std::size_t b : {at(i + 1, j), at(i, j + 1), at(i + 1, j + 1)}) {
        e.emplace(std::min(a, b), std::max(a, b));
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> ev(e.begin(), e.end());
  return SimplicialGraph(std::move(names), ev);
}

std::vector<std::vector<VertexId>> connected_components(const SimplicialGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      out.back().push_back(vid(u));
      for (VertexId w : g.neighbors(vid(u))) {
        if (comp[w.value] < 0) {
          comp[w.value] = c;
          stack.push_back(w.value);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const SimplicialGraph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

VertexId double_plus(VertexId v) { return vid(2 * v.value); }
VertexId double_minus(VertexId v) { return vid(2 * v.value + 1); }

SimplicialGraph double_graph(const SimplicialGraph& g) {
  std::vector<std::string> names;
  names.reserve(2 * g.vertex_count());
  for (const auto& n : g.names()) {
    names.push_back(n + "+");
    names.push_back(n + "-");
  }
  std::vector<std::pair<std::size_t, std::size_t>> e;
  e.reserve(4 * g.edge_count());
  for (auto [u, v] : g.edges()) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        e.emplace_back(2 * u.value + i, 2 * v.value + j);
      }
    }
  }
  return SimplicialGraph(std::move(names), e);
}

GraphMorphism identity_morphism(const SimplicialGraph& g) {
  GraphMorphism m{g, g, {}};
  for (std::size_t i = 0; i < g.vertex_count(); ++i) m.vertex_map.push_back(vid(i));
  return m;
}

GraphMorphism double_projection(const SimplicialGraph& g) {
  GraphMorphism m{double_graph(g), g, {}};
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    m.vertex_map.push_back(vid(i));
    m.vertex_map.push_back(vid(i));
  }
  return m;
}

OrbicoverResult check_orbicover(const GraphMorphism& m) {
  const auto& src = m.source;
  const auto& tgt = m.target;
  if (m.vertex_map.size() != src.vertex_count()) {
    return MalformedMorphism{"vertex map has " + std::to_string(m.vertex_map.size()) +
                             " entries for " + std::to_string(src.vertex_count()) +
                             " source vertices"};
  }
  for (VertexId y : m.vertex_map) {
    if (y.value >= tgt.vertex_count()) return MalformedMorphism{"vertex image out of range"};
  }
  for (auto [x, y] : src.edges()) {
    const VertexId fx = m(x), fy = m(y);
    if (fx == fy) {
      return MalformedMorphism{"edge " + src.name(x) + " " + src.name(y) +
                               " collapses to vertex " + tgt.name(fx)};
    }
    if (!tgt.adjacent(fx, fy)) {
      return MalformedMorphism{"edge " + src.name(x) + " " + src.name(y) +
                               " maps to non-edge " + tgt.name(fx) + " " + tgt.name(fy)};
    }
  }
  OrbicoverCertificate cert;
  cert.fiber_sizes.assign(tgt.vertex_count(), 0);
  for (VertexId y : m.vertex_map) ++cert.fiber_sizes[y.value];
  for (std::size_t xi = 0; xi < src.vertex_count(); ++xi) {
    const VertexId x = vid(xi);
    const VertexId fx = m(x);
    for (VertexId w : tgt.neighbors(fx)) {
      ++cert.checked_pairs;
      std::optional<VertexId> lift;
      for (VertexId z : src.neighbors(x)) {
        if (m(z) == w) {
          lift = z;
          break;
        }
      }
      if (!lift) {
        return LocalSurjectivityViolation{x, {std::min(fx, w), std::max(fx, w)}};
      }
      cert.witnesses.emplace_back(x, *lift);
    }
  }
  return cert;
}

bool is_orbicover(const GraphMorphism& m) {
  return std::holds_alternative<OrbicoverCertificate>(check_orbicover(m));
}

SimplicialGraph incidence_nerve(std::span<const std::string> names,
                                const std::vector<std::vector<bool>>& intersects) {
  const std::size_t n = names.size();
  if (intersects.size() != n) throw InputError("intersection matrix size mismatch");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    if (intersects[i].size() != n) throw InputError("intersection matrix size mismatch");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (intersects[i][j] != intersects[j][i]) {
        throw InputError("intersection flags not symmetric");
      }
      if (intersects[i][j]) e.emplace_back(i, j);
    }
  }
  return SimplicialGraph(std::vector<std::string>(names.begin(), names.end()), e);
}

std::optional<std::vector<VertexId>> find_isomorphism(const SimplicialGraph& a,
                                                      const SimplicialGraph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  {
    std::vector<std::size_t> da, db;
    for (std::size_t i = 0; i < n; ++i) {
      da.push_back(a.degree(vid(i)));
      db.push_back(b.degree(vid(i)));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
  }
  // Assign high-degree vertices of a first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a.degree(vid(x)) > a.degree(vid(y));
  });
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    const std::size_t x = order[k];
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || a.degree(vid(x)) != b.degree(vid(y))) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t xp = order[j];
        ok = a.adjacent(vid(x), vid(xp)) == b.adjacent(vid(y), vid(map[xp]));
      }
      if (!ok) continue;
      map[x] = static_cast<int>(y);
      used[y] = true;
      if (extend(k + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::vector<VertexId> out;
  for (int m : map) out.push_back(vid(static_cast<std::size_t>(m)));
  return out;
}

}  // namespace raagham::graphs
