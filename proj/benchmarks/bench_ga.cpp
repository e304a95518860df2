#include "gea/cfinite.hpp"
#include "gea/gasolver.hpp"
#include "gea/laurent.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_GaTrinomial(benchmark::State& state) {
  const auto P = gea::trinomial();
  for (auto _ : state) benchmark::DoNotOptimize(gea::ga(P, state.range(0)));
}
BENCHMARK(BM_GaTrinomial)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_GasTrinomial(benchmark::State& state) {
  const auto P = gea::trinomial();
  for (auto _ : state) benchmark::DoNotOptimize(gea::gas(P, state.range(0)));
}
BENCHMARK(BM_GasTrinomial)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_Pow(benchmark::State& state) {
  const auto P = gea::parse_laurent("x^-2-x^-1+3+2*x+x^3");
  for (auto _ : state) benchmark::DoNotOptimize(gea::pow(P, state.range(0)));
}
BENCHMARK(BM_Pow)->Arg(20)->Arg(60);

void BM_FitRecurrence(benchmark::State& state) {
  const gea::LinearRecurrence rec{{3, 1, -5, -1, 1}, {2, 0, 2, 2, 6}};
  const auto terms = gea::extend(rec, 2 * state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(gea::fit_recurrence(terms, state.range(0)));
}
BENCHMARK(BM_FitRecurrence)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
