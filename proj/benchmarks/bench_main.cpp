#include <benchmark/benchmark.h>

#include "anumber/building_set.hpp"
#include "anumber/homology.hpp"
#include "anumber/invariants.hpp"
#include "anumber/toric.hpp"

using namespace anumber;

// Sparse hosts have few connected even subsets, which favours the naive
// route; dense hosts expose its 3^n submask cost.
template <GraphFamily family>
static void BM_SaTableLayered(benchmark::State& state) {
  auto g = generate(family, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_sa_table(g));
}
BENCHMARK(BM_SaTableLayered<GraphFamily::cycle>)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SaTableLayered<GraphFamily::complete>)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

template <GraphFamily family>
static void BM_SaTableNaive(benchmark::State& state) {
  auto g = generate(family, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_sa_table_naive(g));
}
BENCHMARK(BM_SaTableNaive<GraphFamily::cycle>)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SaTableNaive<GraphFamily::complete>)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_NestedSetComplex(benchmark::State& state) {
  auto b = graphical_building_set(generate(GraphFamily::complete, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nested_set_complex(b));
}
BENCHMARK(BM_NestedSetComplex)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_ReducedBettiPermutohedron(benchmark::State& state) {
  auto complex = nested_set_complex(graphical_building_set(generate(GraphFamily::complete, 6)));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(complex));
}
BENCHMARK(BM_ReducedBettiPermutohedron)->Unit(benchmark::kMillisecond);

static void BM_BettiTSum(benchmark::State& state) {
  auto g = generate(GraphFamily::complete, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_via_T_sum(g));
}
BENCHMARK(BM_BettiTSum)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_BettiSSum(benchmark::State& state) {
  auto g = generate(GraphFamily::complete, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_via_S_sum(g));
}
BENCHMARK(BM_BettiSSum)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
