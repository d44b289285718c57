#include <benchmark/benchmark.h>

#include "indcol/classic.hpp"
#include "indcol/families.hpp"
#include "indcol/graph6.hpp"
#include "indcol/solver.hpp"

using namespace indcol;

namespace {

void BM_SolvePath(benchmark::State& state) {
  const auto g = generate(family::Path{static_cast<int>(state.range(0))}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, Variant::b));
}
BENCHMARK(BM_SolvePath)->DenseRange(4, 16, 4);

void BM_SolveCycle(benchmark::State& state) {
  const auto g = generate(family::Cycle{static_cast<int>(state.range(0))}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, Variant::ab));
}
BENCHMARK(BM_SolveCycle)->DenseRange(4, 16, 4);

void BM_SolveVariants(benchmark::State& state) {
  const auto g = generate(family::G3{1}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(solve_all_variants(g));
}
BENCHMARK(BM_SolveVariants)->Unit(benchmark::kMillisecond);

void BM_CubicGadget(benchmark::State& state) {
  const auto g = generate(parse_family("cubic")).graph;
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, static_cast<Variant>(state.range(0))));
}
BENCHMARK(BM_CubicGadget)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_RandomGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    state.PauseTiming();
    const auto g = random_graph(n, 0.3, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(solve(g, Variant::a));
  }
}
BENCHMARK(BM_RandomGraph)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_Oracle(benchmark::State& state) {
  const auto g = from_graph6("FhCKG");
  for (auto _ : state) benchmark::DoNotOptimize(oracle_solve(g, Variant::alice_skip));
}
BENCHMARK(BM_Oracle);

void BM_GameChromatic(benchmark::State& state) {
  const auto g = generate(family::G4{static_cast<int>(state.range(0))}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(game_chromatic_number(g));
}
BENCHMARK(BM_GameChromatic)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
