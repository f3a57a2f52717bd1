#include "raagham/emulator.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "raagham/errors.hpp"

namespace raagham::graphs {

GraphMorphism voltage_lift(const VoltageAssignment& a) {
  const std::size_t k = a.group_order;
  const std::size_t n = a.base.vertex_count();
  if (k == 0) throw InputError("voltage group order must be positive");
  if (a.voltages.size() != a.base.edge_count()) {
    throw InputError("voltage assignment needs one voltage per edge");
  }
  std::vector<std::string> names;
  names.reserve(n * k);
  std::vector<VertexId> map;
  map.reserve(n * k);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back(a.base.names()[v] + "." + std::to_string(i));
      map.push_back(vid(v));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(a.voltages.size() * k);
  const auto& be = a.base.edges();
  for (std::size_t e = 0; e < be.size(); ++e) {
    const std::size_t u = be[e].first.value, v = be[e].second.value;
    for (std::size_t i = 0; i < k; ++i) {
      edges.emplace_back(u * k + i, v * k + (i + a.voltages[e]) % k);
    }
  }
  return GraphMorphism{SimplicialGraph(std::move(names), edges), a.base, std::move(map)};
}

namespace {

// Spanning forest edge flags in base.edges() order.
std::vector<bool> spanning_forest(const SimplicialGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> tree(g.edge_count(), false);
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t a = find(edges[e].first.value), b = find(edges[e].second.value);
    if (a != b) {
      parent[a] = b;
      tree[e] = true;
    }
  }
  return tree;
}

SimplicialGraph induced(const SimplicialGraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> names;
  std::vector<std::size_t> local(g.vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    local[vs[i].value] = i;
    names.push_back(g.name(vs[i]));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [u, v] : g.edges()) {
    if (local[u.value] != static_cast<std::size_t>(-1) &&
        local[v.value] != static_cast<std::size_t>(-1)) {
      edges.emplace_back(local[u.value], local[v.value]);
    }
  }
  return SimplicialGraph(std::move(names), edges);
}

struct ComponentAnswer {
  VoltageAssignment voltages;
  GraphMorphism projection;
};

// Returns true and fills `out` on success; counts tried assignments.
bool search_component(const SimplicialGraph& g, const EmulatorSearchOptions& opts,
                      std::size_t& tried, bool& capped, ComponentAnswer& out) {
  const std::size_t v = g.vertex_count(), e = g.edge_count();
  if (opts.allow_single_sheet && is_planar(g)) {
    VoltageAssignment a{g, 1, std::vector<std::size_t>(e, 0)};
    out = {a, voltage_lift(a)};
    return true;
  }
  const std::vector<bool> tree = spanning_forest(g);
  std::vector<std::size_t> cotree;
  for (std::size_t i = 0; i < e; ++i)
    if (!tree[i]) cotree.push_back(i);

  for (std::size_t k = 2; k <= opts.max_sheets; ++k) {
    // A planar simple graph on kv >= 3 vertices has at most 3kv - 6 edges.
    if (k * v >= 3 && k * e > 3 * k * v - 6) continue;
    VoltageAssignment a{g, k, std::vector<std::size_t>(e, 0)};
    // Odometer over cotree voltages; the first cotree edge is most significant,
    // so assignments are visited in lexicographic order.
    while (true) {
      if (tried >= opts.max_assignments) {
        capped = true;
        return false;
      }
      ++tried;
      GraphMorphism lift = voltage_lift(a);
      if (is_connected(lift.source) && is_orbicover(lift) && is_planar(lift.source)) {
        out = {std::move(a), std::move(lift)};
        return true;
      }
      std::size_t pos = cotree.size();
      while (pos > 0) {
        auto& slot = a.voltages[cotree[pos - 1]];
        if (++slot < k) break;
        slot = 0;
        --pos;
      }
      if (pos == 0) break;
    }
    // A planar base with single sheets disabled: the disjoint double is the
    // degenerate answer.
    if (k == 2 && !opts.allow_single_sheet && is_planar(g)) {
      VoltageAssignment d{g, 2, std::vector<std::size_t>(e, 0)};
      out = {d, voltage_lift(d)};
      return true;
    }
  }
  return false;
}

}  // namespace

EmulatorResult find_planar_emulator(const SimplicialGraph& g, const EmulatorSearchOptions& opts) {
  if (opts.max_sheets < 1) throw InputError("max_sheets must be at least 1");
  const auto components = connected_components(g);
  std::size_t tried = 0;
  bool capped = false;
  std::vector<ComponentAnswer> answers;
  for (const auto& comp : components) {
    ComponentAnswer ans;
    const SimplicialGraph sub = induced(g, comp);
    if (!search_component(sub, opts, tried, capped, ans)) {
      std::ostringstream why;
      why << (capped ? "assignment cap reached" : "search space exhausted")
          << " for component containing " << g.name(comp.front()) << " (max_sheets "
          << opts.max_sheets << ")";
      return EmulatorNotFound{tried, capped, why.str()};
    }
    // Map component-local vertices back to g.
    for (auto& x : ans.projection.vertex_map) x = comp[x.value];
    answers.push_back(std::move(ans));
  }

  // Disjoint union of the component covers, ordered by base vertex then sheet.
  std::vector<std::tuple<VertexId, std::size_t, std::size_t>> order;  // base, comp, local
  for (std::size_t c = 0; c < answers.size(); ++c) {
    const auto& m = answers[c].projection;
    for (std::size_t x = 0; x < m.vertex_map.size(); ++x) order.emplace_back(m.vertex_map[x], c, x);
  }
  std::sort(order.begin(), order.end());
  std::vector<std::vector<std::size_t>> global(answers.size());
  for (std::size_t c = 0; c < answers.size(); ++c)
    global[c].resize(answers[c].projection.vertex_map.size());
  std::vector<std::string> names;
  std::vector<VertexId> vmap;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [b, c, x] = order[i];
    global[c][x] = i;
    names.push_back(answers[c].projection.source.names()[x]);
    vmap.push_back(b);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t c = 0; c < answers.size(); ++c)
    for (auto [u, v] : answers[c].projection.source.edges())
      edges.emplace_back(global[c][u.value], global[c][v.value]);

  PlanarEmulator out;
  out.projection = GraphMorphism{SimplicialGraph(std::move(names), edges), g, std::move(vmap)};
  out.assignments_tried = tried;
  for (auto& a : answers) out.voltages.push_back(std::move(a.voltages));
  auto cert = check_orbicover(out.projection);
  if (!std::holds_alternative<OrbicoverCertificate>(cert)) {
    throw ConstructionError("emulator failed orbi-cover revalidation");
  }
  out.certificate = std::get<OrbicoverCertificate>(std::move(cert));
  auto emb = planarity(out.projection.source);
  if (!std::holds_alternative<PlanarEmbedding>(emb) ||
      count_crossings(std::get<PlanarEmbedding>(emb)) != 0) {
    throw ConstructionError("emulator failed planarity revalidation");
  }
  out.embedding = std::get<PlanarEmbedding>(std::move(emb));
  return out;
}

CertificateResult certificate_no_emulator(const SimplicialGraph& g) {
  if (g.empty()) return NotApplicable{"empty graph"};
  const std::size_t d = g.min_degree();
  if (d < 6) {
    return NotApplicable{"minimum degree " + std::to_string(d) + " is below 6"};
  }
  NoEmulatorCertificate c;
  c.vertices = g.vertex_count();
  c.edges = g.edge_count();
  c.min_degree = d;
  std::ostringstream s;
  s << "every vertex of G has degree >= " << d
    << "; an orbi-cover is locally surjective, so every vertex of a cover D has degree >= 6. "
       "If D were planar with V vertices, E edges, F faces, then each face has >= 3 sides "
       "(2E >= 3F) and 2E >= 6V, so 2 = V - E + F <= V - E/3 <= 0, a contradiction.";
  c.derivation = s.str();
  return c;
}

}  // namespace raagham::graphs
