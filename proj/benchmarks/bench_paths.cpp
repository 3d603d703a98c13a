#include <benchmark/benchmark.h>

#include "gurland/gurland.hpp"

using namespace gurland;

namespace {

QueryPoint point_for(const benchmark::State& state) {
  return state.range(0) == 0 ? QueryPoint(1.0, 3.0) : QueryPoint(0.01, 10.0);
}

}  // namespace

static void BM_Direct(benchmark::State& state) {
  const QueryPoint p = point_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(log_modified_ratio_direct(p));
}
BENCHMARK(BM_Direct)->Arg(0)->Arg(1);

static void BM_Product(benchmark::State& state) {
  const QueryPoint p(1.0, 3.0);
  const int terms = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(log_modified_ratio_product(p, terms));
}
BENCHMARK(BM_Product)->Arg(1000)->Arg(10'000);

static void BM_CertifiedExpansion(benchmark::State& state) {
  const QueryPoint p = point_for(state);
  const TruncationOrder m(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(certified_log_ratio(p, m));
}
BENCHMARK(BM_CertifiedExpansion)->Args({0, 2})->Args({0, 10})->Args({1, 3});

static void BM_SInfinity(benchmark::State& state) {
  const QueryPoint p = point_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(s_infinity(p, 1e-13));
}
BENCHMARK(BM_SInfinity)->Arg(0)->Arg(1);

static void BM_SolveT(benchmark::State& state) {
  const QueryPoint p = point_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_t(p));
}
BENCHMARK(BM_SolveT)->Arg(0)->Arg(1);
