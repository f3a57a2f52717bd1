#include <benchmark/benchmark.h>

#include <random>

#include "raagham/flow.hpp"
#include "raagham/hyperlift.hpp"
#include "raagham/raag.hpp"
#include "raagham/representation.hpp"
#include "raagham/verify.hpp"

using namespace raagham;

static void BM_NormalForm(benchmark::State& state) {
  const auto g = graphs::cycle_graph(8);
  std::mt19937_64 rng(1);
  const auto w = raag::random_word(rng, g.vertex_count(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(raag::normal_form(g, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormalForm)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_EmulatorK5(benchmark::State& state) {
  const auto g = graphs::complete_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(graphs::find_planar_emulator(g, {.max_sheets = 2}));
}
BENCHMARK(BM_EmulatorK5);

static void BM_BuildConfiguration(benchmark::State& state) {
  const auto g = graphs::cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twist::build_representation(g, 2));
}
BENCHMARK(BM_BuildConfiguration)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_RepApply(benchmark::State& state) {
  const auto rep = twist::build_representation(graphs::cycle_graph(4), 2);
  std::mt19937_64 rng(2);
  const auto w = raag::random_word(rng, 4, static_cast<std::size_t>(state.range(0)));
  const auto pts = dyn::relation_samples(rep.config, 1000, 3);
  for (auto _ : state) benchmark::DoNotOptimize(twist::rep_apply(rep, w, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_RepApply)->Arg(4)->Arg(32);

static void BM_TwistFlow(benchmark::State& state) {
  const twist::RoundAnnulus a{{0.0, 0.0}, 1.0, 1.5};
  const auto field = twist::twist_hamiltonian(a, twist::standard_profile(a));
  for (auto _ : state) benchmark::DoNotOptimize(dyn::flow_map(field, Point(1.25, 0.0), 1.0, 1000));
}
BENCHMARK(BM_TwistFlow)->Unit(benchmark::kMicrosecond);

static void BM_AssembleHv(benchmark::State& state) {
  const auto els = hyper::enumerate_group(hyper::schottky_generators(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hyper::assemble_Hv(0, els, hyper::default_lift_annulus()));
}
BENCHMARK(BM_AssembleHv)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
