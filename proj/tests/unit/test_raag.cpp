#include <gtest/gtest.h>

#include <random>

#include "raagham/emulator.hpp"
#include "raagham/errors.hpp"
#include "raagham/raag.hpp"

namespace g = raagham::graphs;
namespace r = raagham::raag;
using r::gen;
using r::Word;

namespace {

g::SimplicialGraph two_isolated() { return g::empty_graph(2); }
g::SimplicialGraph edge_uv() { return g::path_graph(2); }

Word commutator(std::size_t u, std::size_t v) {
  return {gen(u), gen(v), gen(u, -1), gen(v, -1)};
}

}  // namespace

TEST(InversionCount, HandCases) {
  EXPECT_EQ(r::inversion_count(two_isolated(), {}), 0u);
  EXPECT_EQ(r::inversion_count(two_isolated(), {gen(1), gen(0)}), 1u);
  EXPECT_EQ(r::inversion_count(edge_uv(), {gen(1), gen(0)}), 0u);
}

TEST(NormalForm, HandCases) {
  EXPECT_EQ(r::normal_form(two_isolated(), {gen(1), gen(0)}).word, (Word{gen(0), gen(1)}));
  EXPECT_EQ(r::normal_form(edge_uv(), {gen(1), gen(0)}).word, (Word{gen(1), gen(0)}));
  EXPECT_TRUE(r::normal_form(edge_uv(), {gen(0), gen(0, -1)}).word.empty());
  // Cancellation across a commuting letter.
  EXPECT_EQ(r::normal_form(two_isolated(), {gen(1), gen(0), gen(1, -1)}).word, (Word{gen(0)}));
  EXPECT_THROW(r::normal_form(edge_uv(), {gen(5)}), raagham::InputError);
}

TEST(NormalForm, AgreesWithClosureOnRandomWords) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 2) e.emplace_back(i, j);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    const g::SimplicialGraph gr(names, e);
    const Word w = r::random_word(rng, n, rng() % 9);
    const Word nf = r::normal_form(gr, w).word;
    EXPECT_EQ(nf, r::normal_form_closure(gr, w));
    EXPECT_EQ(r::normal_form(gr, nf).word, nf);  // idempotent
    EXPECT_LE(nf.size(), w.size());
    EXPECT_TRUE(r::oracle_equal(gr, w, nf));
  }
}

TEST(NormalForm, NoShortlexSmallerShuffleNeighbor) {
  std::mt19937_64 rng(8);
  const auto gr = g::cycle_graph(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Word nf = r::normal_form(gr, r::random_word(rng, 5, 10)).word;
    for (std::size_t i = 0; i + 1 < nf.size(); ++i) {
      if (!r::commute(gr, nf[i].vertex, nf[i + 1].vertex)) continue;
      Word swapped = nf;
      std::swap(swapped[i], swapped[i + 1]);
      EXPECT_FALSE(r::shortlex_less(swapped, nf));
    }
  }
}

TEST(Oracle, CommutatorRelators) {
  EXPECT_TRUE(r::oracle_equal(two_isolated(), commutator(0, 1), {}));
  EXPECT_FALSE(r::oracle_equal(edge_uv(), commutator(0, 1), {}));
  EXPECT_TRUE(r::oracle_equal(two_isolated(), {gen(0), gen(1)}, {gen(1), gen(0)}));
  EXPECT_FALSE(r::oracle_equal(edge_uv(), {gen(0), gen(1)}, {gen(1), gen(0)}));
}

TEST(Oracle, ResourceCapIsLoud) {
  const auto free_abelian = g::empty_graph(8);
  Word w;
  for (std::size_t i = 0; i < 8; ++i) w.push_back(gen(i));
  EXPECT_THROW(r::normal_form_closure(free_abelian, w, 100), raagham::ResourceCapError);
}

TEST(Oracle, SelfConsistencySweep) {
  std::mt19937_64 rng(2024);
  const auto gr = g::path_graph(4);
  for (int i = 0; i < 1000; ++i) {
    const Word w = r::random_word(rng, 4, rng() % 9);
    EXPECT_TRUE(r::oracle_equal(gr, w, r::normal_form(gr, w).word));
  }
}

TEST(Geodesic, HandCases) {
  EXPECT_EQ(r::geodesic_length(edge_uv(), {}), 0u);
  EXPECT_EQ(r::geodesic_length(two_isolated(), {gen(1), gen(0), gen(1, -1)}), 1u);
  EXPECT_EQ(r::geodesic_length(edge_uv(), {gen(1), gen(0), gen(1, -1)}), 3u);
}

TEST(Homomorphism, DiagonalImages) {
  const auto single = g::empty_graph(1);
  const auto d = r::hom_diagonal(single);
  EXPECT_EQ(r::geodesic_length(d.target, r::hom_apply(d, {gen(0)})), 2u);

  const auto dnon = r::hom_diagonal(two_isolated());
  const Word a = dnon.images[0], b = dnon.images[1];
  EXPECT_TRUE(r::oracle_equal(dnon.target, r::concat(a, b), r::concat(b, a)));
  EXPECT_FALSE(r::check_well_defined(dnon).has_value());

  const auto dedge = r::hom_diagonal(edge_uv());
  const Word c = dedge.images[0], e = dedge.images[1];
  EXPECT_FALSE(r::oracle_equal(dedge.target, r::concat(c, e), r::concat(e, c)));

  EXPECT_EQ(r::hom_apply(dedge, {gen(0), gen(1)}),
            (Word{gen(0), gen(1), gen(2), gen(3)}));
  EXPECT_TRUE(r::hom_apply(dedge, {}).empty());
}

TEST(Homomorphism, RetractionInvertsDiagonal) {
  const auto gr = g::cycle_graph(4);
  const auto d = r::hom_diagonal(gr);
  const auto p = r::hom_retraction(gr);
  EXPECT_EQ(r::hom_apply(p, r::hom_apply(d, {gen(2)})), (Word{gen(2)}));
  EXPECT_TRUE(r::hom_apply(p, {gen(1)}).empty());  // g_{u-}
  // pi on g_{u+} g_{v-}
  EXPECT_EQ(r::hom_apply(r::hom_retraction(edge_uv()), {gen(0), gen(3)}), (Word{gen(0)}));
  std::mt19937_64 rng(17);
  const auto pd = r::compose(p, d);
  for (int i = 0; i < 500; ++i) {
    const Word w = r::random_word(rng, 4, rng() % 10);
    EXPECT_EQ(r::normal_form(gr, r::hom_apply(pd, w)).word, r::normal_form(gr, w).word);
  }
}

TEST(Homomorphism, PullbackOfProjectionMatchesDiagonal) {
  const auto gr = g::complete_graph(3);
  const auto pb = r::hom_pullback(g::double_projection(gr));
  const auto d = r::hom_diagonal(gr);
  for (std::size_t v = 0; v < 3; ++v) {
    EXPECT_TRUE(r::oracle_equal(d.target, pb.images[v], d.images[v]));
  }
  const auto id = r::hom_pullback(g::identity_morphism(gr));
  for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(id.images[v], (Word{gen(v)}));
}

TEST(Homomorphism, PullbackRejectsNonCover) {
  g::GraphMorphism m{g::cycle_graph(4), g::path_graph(3),
                     {g::vid(0), g::vid(1), g::vid(0), g::vid(1)}};
  EXPECT_THROW(r::hom_pullback(m), raagham::InputError);
}

TEST(Homomorphism, NoCancellationForDiagonalAndK5Cover) {
  std::mt19937_64 rng(99);
  const auto gr = g::cycle_graph(5);
  const auto d = r::hom_diagonal(gr);
  for (int i = 0; i < 200; ++i) {
    const Word w = r::normal_form(gr, r::random_word(rng, 5, rng() % 10)).word;
    EXPECT_TRUE(r::check_no_cancellation(d, w));
  }
  const auto k5 = g::complete_graph(5);
  const auto em = std::get<g::PlanarEmulator>(g::find_planar_emulator(k5, {.max_sheets = 2}));
  const auto pb = r::hom_pullback(em.projection);
  EXPECT_FALSE(r::check_well_defined(pb).has_value());
  for (std::size_t v = 0; v < 5; ++v) {
    EXPECT_EQ(r::geodesic_length(pb.target, pb.images[v]), 2u);
  }
  for (int i = 0; i < 200; ++i) {
    const Word w = r::normal_form(k5, r::random_word(rng, 5, rng() % 10)).word;
    EXPECT_TRUE(r::check_no_cancellation(pb, w));
  }
  r::Homomorphism trivial{k5, k5, std::vector<Word>(5)};
  EXPECT_FALSE(r::check_no_cancellation(trivial, {gen(0)}));
}

TEST(TextFormat, WordsAndHomomorphisms) {
  const auto gr = g::parse_graph("vertices 2\nu v\nedge u v\n");
  const Word w = r::parse_word(gr, "u v^-1 u^-1\n");
  EXPECT_EQ(w, (Word{gen(0), gen(1, -1), gen(0, -1)}));
  EXPECT_EQ(r::format_word(gr, w), "u v^-1 u^-1");
  EXPECT_THROW(r::parse_word(gr, "q"), raagham::InputError);
  const auto d = r::hom_diagonal(gr);
  const auto back = r::parse_homomorphism(r::format_homomorphism(d), d.source, d.target);
  EXPECT_EQ(back.images, d.images);
}
