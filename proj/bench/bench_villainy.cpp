// Serial vs OpenMP kernels: worst-assignment search and isomorphism-class
// enumeration.
//
//   ./build/villainy_bench --benchmark_filter=Worst

#include <benchmark/benchmark.h>

#include "villainy/villainy.hpp"

namespace {

using namespace villainy;

Graph bench_graph(int which) {
  switch (which) {
    case 0: return build_family(parse_family("cycle(8)"));
    case 1: return build_family(parse_family("disjoint_union(cycle(5), path(3))"));
    default: return build_family(parse_family("complete_bipartite(4, 4)"));
  }
}

MultiplicityVector first_profile(const Graph& g) { return *feasible_multiplicities(g).begin(); }

void BM_WorstSerial(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  auto m = first_profile(g);
  auto mode = state.range(1) ? RepairMode::kWeak : RepairMode::kStrong;
  for (auto _ : state) benchmark::DoNotOptimize(worst_assignment_serial(g, m, mode).value);
}

void BM_WorstParallel(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  auto m = first_profile(g);
  auto mode = state.range(1) ? RepairMode::kWeak : RepairMode::kStrong;
  for (auto _ : state) benchmark::DoNotOptimize(worst_assignment(g, m, mode).value);
}

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nonisomorphic_serial(static_cast<int>(state.range(0))).size());
}

void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nonisomorphic(static_cast<int>(state.range(0))).size());
}

}  // namespace

BENCHMARK(BM_WorstSerial)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WorstParallel)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
