#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "raagham/graph.hpp"

namespace raagham::raag {

using graphs::GraphMorphism;
using graphs::SimplicialGraph;
using graphs::VertexId;

/// g_v^{+1} or g_v^{-1}. Letters order by vertex, then g_v < g_v^{-1}.
struct Letter {
  VertexId vertex;
  int exponent = 1;

  Letter inverse() const { return {vertex, -exponent}; }
  std::uint32_t key() const { return vertex.value * 2 + (exponent < 0 ? 1 : 0); }
  friend bool operator==(Letter a, Letter b) = default;
  friend std::strong_ordering operator<=>(Letter a, Letter b) { return a.key() <=> b.key(); }
};

inline Letter gen(std::size_t v, int e = 1) { return {graphs::vid(v), e}; }

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// Shortlex comparison under the letter order.
bool shortlex_less(const Word& a, const Word& b);

/// Generators commute iff their vertices are distinct and NOT adjacent.
inline bool commute(const SimplicialGraph& g, VertexId a, VertexId b) {
  return a != b && !g.adjacent(a, b);
}

/// Throws InputError when a letter names a vertex outside g.
void validate(const SimplicialGraph& g, const Word& w);

/// Consecutive pairs g_y g_x with y > x and {x,y} a non-edge.
std::size_t inversion_count(const SimplicialGraph& g, const Word& w);

struct NormalForm {
  Word word;
  bool canonical = true;
};

/// Free reduction through commuting letters, then the lexicographically
/// least member of the shuffle class.
NormalForm normal_form(const SimplicialGraph& g, const Word& w);

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Reference normal form: full shuffle closure, cancel and restart, return
/// the shortlex-least closure member. Throws ResourceCapError when a closure
/// exceeds `cap` words.
Word normal_form_closure(const SimplicialGraph& g, const Word& w,
                         std::size_t cap = kDefaultClosureCap);

/// Decides w1 = w2 by closure search on w1 w2^{-1}.
bool oracle_equal(const SimplicialGraph& g, const Word& w1, const Word& w2,
                  std::size_t cap = kDefaultClosureCap);

std::size_t geodesic_length(const SimplicialGraph& g, const Word& w);

/// Generator images; g_v^{-1} maps to the inverse image word.
struct Homomorphism {
  SimplicialGraph source;
  SimplicialGraph target;
  std::vector<Word> images;
};

Word hom_apply(const Homomorphism& h, const Word& w);
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

/// First non-edge {u,v} of the source whose images fail to commute, if any.
std::optional<SimplicialGraph::Edge> check_well_defined(const Homomorphism& h);

/// delta: g_v -> g_{v+} g_{v-} into the double.
Homomorphism hom_diagonal(const SimplicialGraph& g);
/// pi: g_{v+} -> g_v, g_{v-} -> 1.
Homomorphism hom_retraction(const SimplicialGraph& g);
/// p*: g_v -> product of the fiber over v in cover vertex order. Throws
/// InputError when p is not an orbi-cover.
Homomorphism hom_pullback(const GraphMorphism& p);

/// Length additivity of h on the normal form w.
bool check_no_cancellation(const Homomorphism& h, const Word& w);

/// Uniform random word of the given length over the listed generators
/// (all vertices when empty).
Word random_word(std::mt19937_64& rng, std::size_t n_vertices, std::size_t length,
                 const std::vector<VertexId>& alphabet = {});

// Text formats: tokens `v` and `v^-1`; homomorphisms as `image <v> := <word>`.
Word parse_word(const SimplicialGraph& g, std::string_view text);
std::string format_word(const SimplicialGraph& g, const Word& w);
Homomorphism parse_homomorphism(std::string_view text, const SimplicialGraph& source,
                                const SimplicialGraph& target);
std::string format_homomorphism(const Homomorphism& h);

}  // namespace raagham::raag
