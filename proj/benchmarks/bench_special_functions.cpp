#include <benchmark/benchmark.h>

#include "gurland/special_functions.hpp"

using namespace gurland;

static void BM_LogGamma(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(PositiveReal(x)));
  }
}
BENCHMARK(BM_LogGamma)->Arg(25)->Arg(150)->Arg(1000)->Arg(100000);

static void BM_HurwitzZeta(benchmark::State& state) {
  const EvenExponent s(static_cast<int>(state.range(0)));
  const PositiveReal a(static_cast<double>(state.range(1)) / 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hurwitz_zeta(s, a));
  }
}
BENCHMARK(BM_HurwitzZeta)->Args({2, 10})->Args({2, 1000})->Args({20, 10})->Args({100, 30});

static void BM_BernoulliTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bernoulli_numbers(30));
  }
}
BENCHMARK(BM_BernoulliTable);
