#pragma once

#include <optional>
#include <vector>

#include "raagham/configuration.hpp"
#include "raagham/emulator.hpp"
#include "raagham/raag.hpp"
#include "raagham/twist.hpp"

namespace raagham::twist {

/// psi_N: g_v -> f_v^N, the time-N double Dehn twist on A(v). For a
/// nonplanar Artin graph the configuration is built for a planar emulator
/// and words are first pushed through the pullback homomorphism.
struct Representation {
  graphs::SimplicialGraph artin_graph;      // Gamma
  Configuration config;                     // built for Gamma or for the emulator
  int N = 2;
  std::vector<TwistProfile> profiles;       // per configuration vertex
  std::optional<raag::Homomorphism> pullback;  // Gamma -> emulator, when used

  /// Graph whose generators act directly (Gamma or the emulator).
  const graphs::SimplicialGraph& acting_graph() const { return config.graph; }
};

struct RepresentationOptions {
  ConfigurationOptions config{};
  std::size_t max_sheets = 2;  // emulator search when Gamma is nonplanar
};

/// Throws InputError for N < 2, or when Gamma is nonplanar and no emulator is
/// supplied or found.
Representation build_representation(const graphs::SimplicialGraph& gamma, int N,
                                    const std::optional<graphs::GraphMorphism>& emulator = {},
                                    const RepresentationOptions& opts = {});

/// Word over the acting graph (applies the pullback when present).
raag::Word acting_word(const Representation& rep, const raag::Word& w);

/// Closed-form evaluation, letters applied right to left. Consecutive twists
/// about the same annulus accumulate their angles before rotating, so a word
/// whose net rotation is zero returns the input point bitwise.
Point rep_apply_point(const Representation& rep, const raag::Word& acting, Point p);
std::vector<Point> rep_apply(const Representation& rep, const raag::Word& w,
                             const std::vector<Point>& pts);

/// The generator image f_v^{N e} for a vertex of the acting graph.
PlaneMap generator_map(const Representation& rep, std::size_t vertex, int exponent = 1);

}  // namespace raagham::twist
