#include <benchmark/benchmark.h>

#include "betaorder/lemma.hpp"
#include "betaorder/orders.hpp"
#include "betaorder/sign_pattern.hpp"

namespace {

using namespace betaorder;

void BM_Leq(benchmark::State& state) {
  const SignPattern p = SignPattern::parse("+-+");
  const SignPattern q = SignPattern::parse("-+-+-");
  for (auto _ : state) benchmark::DoNotOptimize(leq(p, q));
}
BENCHMARK(BM_Leq);

void BM_ChebyshevGrid(benchmark::State& state) {
  const GridPolicy grid{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(chebyshev_grid(0.0, 1.0, grid));
}
BENCHMARK(BM_ChebyshevGrid)->Arg(257)->Arg(2049);

void BM_StNumeric(benchmark::State& state) {
  const Law f = beta_law({3, 2});
  const Law g = beta_law({2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(verify_st_numeric(f, g));
}
BENCHMARK(BM_StNumeric)->Unit(benchmark::kMillisecond);

void BM_StarNumeric(benchmark::State& state) {
  const Law f = beta_law({3, 2});
  const Law g = beta_law({2, 3});
  CheckOptions opts;
  opts.lines = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_star_numeric(f, g, opts));
}
BENCHMARK(BM_StarNumeric)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ConvexNumeric(benchmark::State& state) {
  const Law f = beta_law({3, 2});
  const Law g = beta_law({2, 3});
  CheckOptions opts;
  opts.lines = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_convex_numeric(f, g, opts));
}
BENCHMARK(BM_ConvexNumeric)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_LemmaChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma_chain({2.5, 1.5}, {1.5, 2.5}, {0.8, 0.1}));
}
BENCHMARK(BM_LemmaChain)->Unit(benchmark::kMillisecond);

}  // namespace
