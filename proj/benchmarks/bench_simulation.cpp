#include <benchmark/benchmark.h>

#include <random>

#include "treepoly/percolation.hpp"

using namespace treepoly;

namespace {

RootedTree path(int n) {
  RootedTree t;
  for (int i = 1; i < n; ++i) t = RootedTree(std::vector<RootedTree>{t});
  return t;
}

void BM_PercolationRun(benchmark::State& state) {
  const FlatForest flat = FlatForest::of(path(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(percolate_root_cluster(flat, 32768, rng));
  }
}
BENCHMARK(BM_PercolationRun)->Arg(8)->Arg(64);

void BM_CuttingRun(benchmark::State& state) {
  const FlatForest flat = FlatForest::of(path(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_cutting_run(flat, rng));
  }
}
BENCHMARK(BM_CuttingRun)->Arg(8)->Arg(64);

void BM_EstimateP(benchmark::State& state) {
  const RootedTree t = path(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_p(t, 32768, 10000, 7));
  }
}
BENCHMARK(BM_EstimateP)->Unit(benchmark::kMillisecond);

}  // namespace
