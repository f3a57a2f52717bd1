#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "raagham/circle_packing.hpp"
#include "raagham/graph.hpp"
#include "raagham/planarity.hpp"
#include "raagham/twist.hpp"

namespace raagham::twist {

struct ConfigurationOptions {
  std::size_t grid = 1024;        // flood-fill rows across the bounding square
  std::size_t max_grid = 1 << 17; // refinement limit
  double max_inflation = 0.2;    // upper bound on delta
  double fit_radius = 0.5;       // the configuration lies in |z| < fit_radius
  PackingOptions packing{};
};

/// Circles C_v, disks B(v), annuli A(v) and punctures for a planar graph.
struct Configuration {
  graphs::SimplicialGraph graph;
  std::vector<Point> centers;   // of C_v and B(v)
  std::vector<double> radii;    // of C_v (inflated packing radii)
  std::vector<RoundAnnulus> annuli;
  std::vector<double> widths;   // chart half widths a_v
  std::vector<std::array<Point, 2>> p1;  // two points of C_v per vertex
  std::vector<Point> p2;                 // two per complementary component
  Point q;
  Point basepoint;
  // Per graph edge (graph.edges() order): the two crossing points of C_u and C_v.
  std::vector<std::array<Point, 2>> crossings;

  // Provenance.
  double inflation = 0.0;
  double inflation_max = 0.0;
  std::size_t grid_used = 0;
  std::size_t complementary_components = 0;
  std::size_t packing_iterations = 0;
  double packing_error = 0.0;

  std::vector<Point> punctures() const;
};

Configuration build_configuration(const graphs::PlanarEmbedding& e,
                                  const ConfigurationOptions& opts = {});

/// Open-annulus intersection test (exact interval reasoning on radii).
bool annuli_intersect(const RoundAnnulus& a, const RoundAnnulus& b);

/// Whether three closed discs share a point.
bool discs_share_point(Point c1, double r1, Point c2, double r2, Point c3, double r3);

/// Both intersection points of two crossing circles.
std::array<Point, 2> circle_intersections(Point c1, double r1, Point c2, double r2);

/// Checks every configuration invariant; returns the list of violations.
std::vector<std::string> validate_configuration(const Configuration& c);

/// Nerve of the annuli.
graphs::SimplicialGraph annulus_nerve(const Configuration& c);

/// Points where twists act visibly: on each annulus at chart heights +-a/2,
/// near each puncture, and in each overlap region.
std::vector<Point> default_marked_points(const Configuration& c, std::size_t per_circle = 8);

/// A point of A(u) n A(v) for each edge (graph.edges() order), off both
/// central circles.
std::vector<std::vector<Point>> overlap_probe_points(const Configuration& c, std::size_t per_edge = 4);

nlohmann::json to_json(const Configuration& c);
std::string to_svg(const Configuration& c, const std::vector<Point>& extra = {});

}  // namespace raagham::twist
