#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "raagham/geometry.hpp"
#include "raagham/graph.hpp"

namespace raagham::graphs {

/// Straight-line drawing witnessing planarity.
struct PlanarEmbedding {
  SimplicialGraph graph;
  std::vector<Point> positions;  // indexed by vertex
};

struct NonplanarWitness {
  enum class Kind { EdgeBound, K5Subdivision, K33Subdivision };
  Kind kind = Kind::EdgeBound;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<SimplicialGraph::Edge> kuratowski_edges;  // empty for EdgeBound
};

std::string to_string(NonplanarWitness::Kind k);

using PlanarityResult = std::variant<PlanarEmbedding, NonplanarWitness>;

PlanarityResult planarity(const SimplicialGraph& g);
bool is_planar(const SimplicialGraph& g);

/// Independent geometric validator: number of pairs of closed edge segments
/// meeting outside shared endpoints (including vertices lying on edges).
std::size_t count_crossings(const PlanarEmbedding& e);

/// Checks that the Kuratowski edge set is a subdivision of K5 or K3,3.
bool validate_witness(const SimplicialGraph& g, const NonplanarWitness& w);

}  // namespace raagham::graphs
