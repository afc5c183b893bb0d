#include <benchmark/benchmark.h>

#include "treepoly/enumeration.hpp"
#include "treepoly/invariants.hpp"

using namespace treepoly;

namespace {

// Full sweep cost at one size, memoized across the sweep (the collision
// search workload).
void BM_SweepP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Invariants inv;
    TreeStream stream(n);
    std::size_t terms = 0;
    while (auto t = stream.next()) terms += inv.P(*t).term_count();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_SweepP)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SweepM(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Invariants inv;
    TreeStream stream(n);
    std::size_t terms = 0;
    while (auto t = stream.next()) terms += inv.M(*t).term_count();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_SweepM)->Arg(8)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_SweepPgf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Invariants inv;
    TreeStream stream(n);
    std::size_t terms = 0;
    while (auto t = stream.next()) terms += inv.pgf(*t).coefficients().size();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_SweepPgf)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_BruteVsRecursiveS(benchmark::State& state) {
  // Definitional route on the 12-vertex path: 2^11 subtree sets.
  RootedTree t;
  for (int i = 1; i < 12; ++i) t = RootedTree(std::vector<RootedTree>{t});
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_S(t));
  }
}
BENCHMARK(BM_BruteVsRecursiveS)->Unit(benchmark::kMillisecond);

}  // namespace
