#include <benchmark/benchmark.h>

#include <random>

#include "treepoly/multipoly.hpp"

using namespace treepoly;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-50, 50);
  MultiPoly p;
  for (int i = 0; i < terms; ++i) {
    p += MultiPoly::monomial(coeff(rng), exp(rng), exp(rng), exp(rng));
  }
  return p;
}

void BM_PolyMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const MultiPoly a = random_poly(rng, static_cast<int>(state.range(0)), 10);
  const MultiPoly b = random_poly(rng, static_cast<int>(state.range(0)), 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(128);

void BM_PolySubstitute(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const MultiPoly p = random_poly(rng, static_cast<int>(state.range(0)), 8);
  const MultiPoly z = MultiPoly::variable(Var::z);
  const std::vector<std::pair<Var, MultiPoly>> pgf_rename = {
      {Var::x, MultiPoly::variable(Var::x) * z},
      {Var::y, MultiPoly::one() - z}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.substituted(pgf_rename));
  }
}
BENCHMARK(BM_PolySubstitute)->Arg(16)->Arg(64);

void BM_PolySerialize(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const MultiPoly p = random_poly(rng, 64, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.str());
  }
}
BENCHMARK(BM_PolySerialize);

}  // namespace
