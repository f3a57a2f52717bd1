#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "raagham/geometry.hpp"
#include "raagham/planarity.hpp"

namespace raagham::twist {

/// Triangulated sphere. Vertices [0, original) are the graph vertices, the
/// rest are dummies. Faces are consistently oriented.
struct Triangulation {
  std::size_t vertex_count = 0;
  std::size_t original = 0;
  std::vector<std::array<std::size_t, 3>> faces;
  std::vector<std::size_t> hubs;  // one dummy per face walk, inside that face
};

/// Completes a connected straight-line embedding (>= 2 vertices) to a
/// sphere triangulation that adds no edge between graph vertices: every face
/// walk of length k receives k side vertices, k corner vertices and a hub.
Triangulation complete_triangulation(const graphs::PlanarEmbedding& e);

struct Packing {
  std::vector<Point> centers;
  std::vector<double> radii;
  std::size_t iterations = 0;
  double max_angle_error = 0.0;
};

struct PackingOptions {
  double tolerance = 1e-10;  // on interior angle sums
  std::size_t max_iterations = 2'000'000;
};

/// Tangency packing of the triangulation with faces[outer_face] as the
/// boundary triangle (unit radii). Throws ConstructionError on
/// non-convergence or when the layout fails validation.
Packing pack_triangulation(const Triangulation& t, std::size_t outer_face,
                           const PackingOptions& opts = {});

/// Largest relative tangency error over triangulation edges and smallest
/// relative gap over non-adjacent pairs among the first `count` vertices.
struct PackingQuality {
  double max_tangency_error = 0.0;
  double min_gap = 0.0;
};
PackingQuality packing_quality(const Triangulation& t, const Packing& p, std::size_t count);

/// Image of the circle (c, r) under z -> 1/(z - z0); z0 must lie outside
/// the closed disc.
void invert_circle(Point z0, Point& c, double& r);

}  // namespace raagham::twist
