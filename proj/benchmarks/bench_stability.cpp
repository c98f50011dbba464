#include <benchmark/benchmark.h>

#include "ringdyn/integrate.hpp"
#include "ringdyn/model.hpp"
#include "ringdyn/stability.hpp"
#include "ringdyn/symmetry.hpp"

namespace {

using namespace ringdyn;

void BM_SpectrumUniform(benchmark::State& state) {
  RingParams params{static_cast<int>(state.range(0)), 0.4, 1.0, 2.0, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_uniform(params, 0.9));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectrumUniform)->RangeMultiplier(4)->Range(8, 1024)->Complexity(benchmark::oN);

void BM_BlockEigensolve(benchmark::State& state) {
  RingParams params{static_cast<int>(state.range(0)), 0.4, 1.0, 2.0, 0.0};
  for (auto _ : state) {
    double worst = 0.0;
    for (int k = 0; k < params.pairs(); ++k) {
      const auto values = eigenvalues_numeric(block_dk(params, 0.9, k).matrix);
      worst = std::max(worst, values[0].real());
    }
    benchmark::DoNotOptimize(worst);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BlockEigensolve)->RangeMultiplier(4)->Range(8, 1024)->Complexity(benchmark::oN);

void BM_FloquetBlock(benchmark::State& state) {
  RingParams params{8, 0.5, 1.0, 2.0, 0.2};
  const long steps = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(floquet_block(params, 1, 0.0, steps));
  }
}
BENCHMARK(BM_FloquetBlock)->Arg(1000)->Arg(4000);

void BM_SpectrumAlternatingCell(benchmark::State& state) {
  RingParams params{8, 0.5, 1.0, 2.0, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_alternating(params, 1000));
  }
}
BENCHMARK(BM_SpectrumAlternatingCell);

void BM_RhsPolar(benchmark::State& state) {
  RingParams params{static_cast<int>(state.range(0)), 0.25, 1.0, 2.0, 0.0};
  const Eigen::VectorXd y = to_polar_vector(decoupled_state(params, {0.0, 0.9}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rhs_polar(params, y));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RhsPolar)->RangeMultiplier(4)->Range(8, 512)->Complexity(benchmark::oN);

void BM_JacobianAssembly(benchmark::State& state) {
  RingParams params{static_cast<int>(state.range(0)), 0.25, 1.0, 2.0, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobian_analytic(params, 0.9));
  }
}
BENCHMARK(BM_JacobianAssembly)->Arg(8)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
