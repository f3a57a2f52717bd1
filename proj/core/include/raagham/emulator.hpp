#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "raagham/graph.hpp"
#include "raagham/planarity.hpp"

namespace raagham::graphs {

/// Z/k voltages, one per edge of `base` in `base.edges()` order. The edge
/// {u,v} with u < v and voltage g lifts to {(u,i), (v,i+g)}.
struct VoltageAssignment {
  SimplicialGraph base;
  std::size_t group_order = 1;
  std::vector<std::size_t> voltages;
};

/// Derived cover. Sheet i of vertex v is vertex v*k + i, named "<v>.<i>",
/// so the vertex order of the cover is the lexicographic lift of the base
/// order.
GraphMorphism voltage_lift(const VoltageAssignment& a);

struct PlanarEmulator {
  GraphMorphism projection;  // cover -> base
  PlanarEmbedding embedding;
  OrbicoverCertificate certificate;
  std::vector<VoltageAssignment> voltages;  // one per connected component of the base
  std::size_t assignments_tried = 0;
};

struct EmulatorNotFound {
  std::size_t assignments_tried = 0;
  bool cap_reached = false;
  std::string reason;
};

using EmulatorResult = std::variant<PlanarEmulator, EmulatorNotFound>;

struct EmulatorSearchOptions {
  std::size_t max_sheets = 2;
  std::size_t max_assignments = 1'000'000;
  bool allow_single_sheet = true;  // planar components answer with themselves
};

/// Searches Z/k voltage lifts, k = 2..max_sheets, for a connected planar
/// cover of each component. The lexicographically least assignment wins.
EmulatorResult find_planar_emulator(const SimplicialGraph& g, const EmulatorSearchOptions& opts);

struct NoEmulatorCertificate {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  std::string derivation;
};

struct NotApplicable {
  std::string reason;
};

using CertificateResult = std::variant<NoEmulatorCertificate, NotApplicable>;

/// Euler-count obstruction: when every vertex has degree >= 6, so does every
/// vertex of any orbi-cover, and no finite planar graph has that property.
CertificateResult certificate_no_emulator(const SimplicialGraph& g);

}  // namespace raagham::graphs
