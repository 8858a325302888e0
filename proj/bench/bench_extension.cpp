// Serial reference against the OpenMP kernels.
//   bench_extension --benchmark_filter=Extension

#include "maxips/extension.hpp"
#include "maxips/heronian.hpp"
#include "maxips/search.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace maxips;

namespace {

// Triangles with a long side, where the d sweep dominates.
const EmbeddedTriangle kTriangles[] = {
    {{0, 0}, {15, 20}, {0, 20}},
    {{0, 0}, {-336, -377}, {384, -2030}},
    {{0, 0}, {0, -33}, {44, -33}},
};

void BM_ExtensionSerial(benchmark::State& state) {
  const auto& E = kTriangles[state.range(0)];
  const auto mode = state.range(1) ? SolveMode::rational : SolveMode::integral;
  for (auto _ : state) benchmark::DoNotOptimize(extension_points_serial(E, mode));
}

void BM_ExtensionParallel(benchmark::State& state) {
  const auto& E = kTriangles[state.range(0)];
  const auto mode = state.range(1) ? SolveMode::rational : SolveMode::integral;
  for (auto _ : state) benchmark::DoNotOptimize(extension_points(E, mode));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_Search(benchmark::State& state) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  SearchConfig cfg;
  cfg.max_diameter = 60;
  for (auto _ : state) benchmark::DoNotOptimize(search_maximal_sets(cfg));
  omp_set_num_threads(saved);
}

}  // namespace

BENCHMARK(BM_ExtensionSerial)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExtensionParallel)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Search)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
