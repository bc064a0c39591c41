#include <benchmark/benchmark.h>

#include "mast/dirichlet.hpp"
#include "mast/gamma.hpp"
#include "mast/generate.hpp"
#include "mast/mast_exact.hpp"
#include "mast/rng.hpp"
#include "mast/split_pmf.hpp"

using namespace mast;

static void BM_GenerateUniform(benchmark::State& state) {
  const long n = state.range(0);
  RngStream rng(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_uniform(n, RootKind::Rooted, rng));
  state.SetComplexityN(n);
}
BENCHMARK(BM_GenerateUniform)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)
    ->Complexity(benchmark::oN);

static void BM_Gamma(benchmark::State& state) {
  const long n = state.range(0);
  RngStream rng(2);
  const BinaryTree t = generate_uniform(n, RootKind::Rooted, rng);
  const BinaryTree u = generate_uniform(n, RootKind::Rooted, rng);
  for (auto _ : state) {
    RngStream run(3);
    benchmark::DoNotOptimize(gamma(t, u, run));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Gamma)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)
    ->Complexity(benchmark::oNLogN);

static void BM_MastExact(benchmark::State& state) {
  const long n = state.range(0);
  RngStream rng(4);
  const BinaryTree t = generate_uniform(n, RootKind::Rooted, rng);
  const BinaryTree u = generate_uniform(n, RootKind::Rooted, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mast_exact(t, u));
}
BENCHMARK(BM_MastExact)->DenseRange(8, 14, 2);

static void BM_MomentTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(moment_table(0.4464));
}
BENCHMARK(BM_MomentTable);

static void BM_SolveBeta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_beta(1e-6));
}
BENCHMARK(BM_SolveBeta);

static void BM_SplitPmfDoubly(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(split_pmf_doubly(n));
}
BENCHMARK(BM_SplitPmfDoubly)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
