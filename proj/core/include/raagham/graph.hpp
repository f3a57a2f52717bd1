#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace raagham::graphs {

struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

constexpr VertexId vid(std::size_t i) { return VertexId{static_cast<std::uint32_t>(i)}; }

/// Finite simplicial graph: no loops, no multiple edges. The vertex order is
/// the insertion order and never changes; normal forms depend on it.
class SimplicialGraph {
 public:
  using Edge = std::pair<VertexId, VertexId>;  // first < second

  SimplicialGraph() = default;
  /// Throws InputError on duplicate names, loops, repeated edges or
  /// out-of-range endpoints.
  SimplicialGraph(std::vector<std::string> names,
                  std::span<const std::pair<std::size_t, std::size_t>> edges);

  static SimplicialGraph from_names(
      std::vector<std::string> names,
      std::span<const std::pair<std::string, std::string>> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(VertexId v) const { return names_.at(v.value); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId at(std::string_view name) const;

  bool adjacent(VertexId u, VertexId v) const {
    return matrix_[u.value * names_.size() + v.value] != 0;
  }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v.value); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v.value).size(); }
  std::size_t min_degree() const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<std::pair<std::size_t, std::size_t>> edge_indices() const;

  friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::uint8_t> matrix_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Small graph families used by tests, benchmarks and the CLI.
SimplicialGraph complete_graph(std::size_t n, std::string_view prefix = "v");
SimplicialGraph cycle_graph(std::size_t n, std::string_view prefix = "v");
SimplicialGraph path_graph(std::size_t n, std::string_view prefix = "v");
SimplicialGraph empty_graph(std::size_t n, std::string_view prefix = "v");
/// 1-skeleton of the rows x cols triangulated torus; every vertex has degree 6
/// when rows, cols >= 3.
SimplicialGraph torus_triangulation(std::size_t rows, std::size_t cols);

std::vector<std::vector<VertexId>> connected_components(const SimplicialGraph& g);
bool is_connected(const SimplicialGraph& g);

/// The double: vertices v+ (index 2i) and v- (index 2i+1), both copies of
/// every edge, plus the cross edges {v×i, w×j}, i != j.
SimplicialGraph double_graph(const SimplicialGraph& g);
VertexId double_plus(VertexId v);
VertexId double_minus(VertexId v);

/// Vertex-level graph map. Edges map to the edge spanned by the endpoint
/// images; a morphism whose endpoint images are equal or non-adjacent is
/// malformed.
struct GraphMorphism {
  SimplicialGraph source;
  SimplicialGraph target;
  std::vector<VertexId> vertex_map;

  VertexId operator()(VertexId x) const { return vertex_map.at(x.value); }
};

GraphMorphism identity_morphism(const SimplicialGraph& g);
GraphMorphism double_projection(const SimplicialGraph& g);

struct OrbicoverCertificate {
  std::size_t checked_pairs = 0;               // (source vertex, incident target edge)
  std::vector<std::size_t> fiber_sizes;        // indexed by target vertex
  std::vector<std::pair<VertexId, VertexId>> witnesses;  // lifted edge per checked pair
};

struct LocalSurjectivityViolation {
  VertexId vertex;                     // in source
  SimplicialGraph::Edge missing_edge;  // in target, incident to image of vertex
};

struct MalformedMorphism {
  std::string reason;
};

using OrbicoverResult =
    std::variant<OrbicoverCertificate, LocalSurjectivityViolation, MalformedMorphism>;

OrbicoverResult check_orbicover(const GraphMorphism& m);
bool is_orbicover(const GraphMorphism& m);

/// Graph with one vertex per curve and an edge per intersecting pair.
SimplicialGraph incidence_nerve(std::span<const std::string> names,
                                const std::vector<std::vector<bool>>& intersects);

/// Backtracking isomorphism search; returns the vertex bijection a -> b.
std::optional<std::vector<VertexId>> find_isomorphism(const SimplicialGraph& a,
                                                      const SimplicialGraph& b);
inline bool isomorphic(const SimplicialGraph& a, const SimplicialGraph& b) {
  return find_isomorphism(a, b).has_value();
}

// Text formats.
//   vertices <n>
//   <name> <name> ...
//   edge <u> <v>
// Morphisms append lines `map <x> <y>` after the source graph.
SimplicialGraph parse_graph(std::string_view text);
std::string format_graph(const SimplicialGraph& g);
SimplicialGraph read_graph_file(const std::string& path);

/// Reads a cover file: the cover graph followed by `map` lines into `target`.
GraphMorphism parse_morphism(std::string_view text, const SimplicialGraph& target);
std::string format_morphism(const GraphMorphism& m);

}  // namespace raagham::graphs
