#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "steinweiss/constants.hpp"
#include "steinweiss/kernels.hpp"
#include "steinweiss/verify.hpp"

using namespace steinweiss;

static void BM_PittGradientD(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(constants::pitt_gradient_D({n, 1.7}).d_alpha);
  }
}
BENCHMARK(BM_PittGradientD)->Arg(3)->Arg(12);

static void BM_PsiEval(benchmark::State& state) {
  const kernels::KernelSpec spec{4, 1.5, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::psi_eval(spec, 1.7));
  }
}
BENCHMARK(BM_PsiEval)->Arg(0)->Arg(2);

static void BM_PsiL1Numeric(benchmark::State& state) {
  const kernels::KernelSpec spec{static_cast<int>(state.range(0)), 1.0, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::psi_L1_numeric(spec).value);
  }
}
BENCHMARK(BM_PsiL1Numeric)->Arg(3)->Arg(8);

static void BM_MultiplicativeConvolve(benchmark::State& state) {
  const kernels::LogGrid grid{30.0, static_cast<int>(state.range(0))};
  std::vector<double> k(grid.points), h(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    const double u = grid.node(i);
    k[i] = std::exp(-std::abs(u));
    h[i] = std::exp(-u * u / 50.0);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::multiplicative_convolve(k, h, grid));
  }
  state.SetComplexityN(grid.points);
}
BENCHMARK(BM_MultiplicativeConvolve)->Arg(1025)->Arg(4097);

static void BM_WeightedNorm(benchmark::State& state) {
  verify::TestFunctionRng rng(1);
  const auto f = rng.next_function(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::weighted_norm(f, -1.3));
  }
}
BENCHMARK(BM_WeightedNorm)->Arg(3)->Arg(9);

BENCHMARK_MAIN();
