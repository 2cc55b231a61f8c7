#include <benchmark/benchmark.h>

#include "chromsym/chromatic.hpp"
#include "chromsym/cotree.hpp"
#include "chromsym/symfunc.hpp"

using namespace chromsym;

namespace {

// J(U(K4,K2),K4) grown or shrunk to n vertices along a fixed recipe.
ConstructExpr sample_cograph(int n) {
  const int half = n / 2;
  return canonicalize(ConstructExpr::make_join(
      {ConstructExpr::make_union({ConstructExpr::complete(std::max(1, half - 1)), ConstructExpr::leaf()}),
       ConstructExpr::edgeless(std::max(1, n - half))}));
}

void BM_CsfStable(benchmark::State& state) {
  const auto g = to_graph(sample_cograph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(csf_stable(g));
}
BENCHMARK(BM_CsfStable)->DenseRange(6, 12, 2);

void BM_CsfCotree(benchmark::State& state) {
  const auto e = sample_cograph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(csf_cotree(e));
}
BENCHMARK(BM_CsfCotree)->DenseRange(6, 12, 2)->Arg(20);

void BM_CsfPowersum(benchmark::State& state) {
  const auto g = to_graph(sample_cograph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(csf_powersum(g));
}
BENCHMARK(BM_CsfPowersum)->DenseRange(4, 8, 2);

void BM_Multiply(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  SymFunc f(Basis::m), g(Basis::m);
  for (const auto& p : partitions_of(w)) {
    f.add(p, 1);
    g.add(p, 2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(multiply(f, g));
}
BENCHMARK(BM_Multiply)->DenseRange(2, 5, 1);

void BM_ToE(benchmark::State& state) {
  const auto x = csf_cotree(sample_cograph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(to_e(x));
}
BENCHMARK(BM_ToE)->DenseRange(6, 12, 2);

}  // namespace

BENCHMARK_MAIN();
