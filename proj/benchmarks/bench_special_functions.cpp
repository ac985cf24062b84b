#include <benchmark/benchmark.h>

#include <vector>

#include "betaorder/special_functions.hpp"

namespace {

using namespace betaorder::special;

void BM_RegIncBeta(benchmark::State& state) {
  const double a = state.range(0) / 10.0;
  const double b = state.range(1) / 10.0;
  double x = 0.0;
  for (auto _ : state) {
    x += 1.0 / 1024;
    if (x >= 1.0) x = 1.0 / 1024;
    benchmark::DoNotOptimize(reg_inc_beta(x, a, b));
  }
}
BENCHMARK(BM_RegIncBeta)->Args({3, 7})->Args({25, 15})->Args({500, 300});

void BM_InvRegIncBeta(benchmark::State& state) {
  const double a = state.range(0) / 10.0;
  const double b = state.range(1) / 10.0;
  double u = 0.0;
  for (auto _ : state) {
    u += 1.0 / 1024;
    if (u >= 1.0) u = 1.0 / 1024;
    benchmark::DoNotOptimize(inv_reg_inc_beta(u, a, b));
  }
}
BENCHMARK(BM_InvRegIncBeta)->Args({3, 7})->Args({25, 15})->Args({500, 300});

void BM_RegIncGamma(benchmark::State& state) {
  const double shape = state.range(0) / 10.0;
  double x = 0.0;
  for (auto _ : state) {
    x += 0.01;
    if (x >= 4 * shape) x = 0.01;
    benchmark::DoNotOptimize(reg_inc_gamma(x, shape));
  }
}
BENCHMARK(BM_RegIncGamma)->Arg(5)->Arg(25)->Arg(500);

void BM_InvRegIncGamma(benchmark::State& state) {
  const double shape = state.range(0) / 10.0;
  double u = 0.0;
  for (auto _ : state) {
    u += 1.0 / 1024;
    if (u >= 1.0) u = 1.0 / 1024;
    benchmark::DoNotOptimize(inv_reg_inc_gamma(u, shape));
  }
}
BENCHMARK(BM_InvRegIncGamma)->Arg(5)->Arg(25)->Arg(500);

}  // namespace
