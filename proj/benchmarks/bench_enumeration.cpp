#include <benchmark/benchmark.h>

#include "treepoly/enumeration.hpp"

using namespace treepoly;

namespace {

void BM_LevelSequenceSuccessor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TreeStream stream(n);
    std::uint64_t count = 0;
    while (stream.next_level_sequence() != nullptr) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(
                              count_rooted_trees(n).convert_to<std::int64_t>()));
}
BENCHMARK(BM_LevelSequenceSuccessor)->Arg(12)->Arg(14)->Arg(16)
    ->Unit(benchmark::kMillisecond);

void BM_StreamWithTreeConstruction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TreeStream stream(n);
    std::uint64_t vertices = 0;
    while (auto t = stream.next()) vertices += t->vertex_count();
    benchmark::DoNotOptimize(vertices);
  }
}
BENCHMARK(BM_StreamWithTreeConstruction)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMillisecond);

void BM_CountRecurrence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_rooted_trees(64));
  }
}
BENCHMARK(BM_CountRecurrence);

}  // namespace
