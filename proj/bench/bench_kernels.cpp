// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "dmb/roots.hpp"
#include "dmb/sweep.hpp"

namespace {

std::vector<dmb::Complex> random_monic(std::size_t degree, dmb::Precision prec) {
  std::mt19937_64 rng(degree);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<dmb::Complex> c;
  for (std::size_t k = 0; k < degree; ++k) c.emplace_back(u(rng), u(rng), prec);
  c.emplace_back(1.0, 0.0, prec);
  return c;
}

template <bool Parallel>
void BM_AberthStep(benchmark::State& state) {
  const auto degree = static_cast<std::size_t>(state.range(0));
  const dmb::Precision prec = 256;
  auto coeffs = random_monic(degree, prec);
  auto start = dmb::kernels::aberth_initial(coeffs, prec);
  for (auto _ : state) {
    auto z = start;
    double c = Parallel ? dmb::kernels::aberth_step_omp(coeffs, z) : dmb::kernels::aberth_step_serial(coeffs, z);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}

template <bool Parallel>
void BM_Sweep(benchmark::State& state) {
  dmb::SweepParams params;
  params.count = static_cast<std::size_t>(state.range(0));
  params.seed = 42;
  for (auto _ : state) {
    auto s = Parallel ? dmb::run_sweep(params) : dmb::run_sweep_serial(params);
    benchmark::DoNotOptimize(s.violations);
  }
}

}  // namespace

BENCHMARK(BM_AberthStep<false>)->Name("aberth_step/serial")->RangeMultiplier(2)->Range(8, 128);
BENCHMARK(BM_AberthStep<true>)->Name("aberth_step/omp")->RangeMultiplier(2)->Range(8, 128);
BENCHMARK(BM_Sweep<false>)->Name("sweep/serial")->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<true>)->Name("sweep/omp")->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
