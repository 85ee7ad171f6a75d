#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "qmx/sampling.hpp"

namespace {

void BM_SampleMc(benchmark::State& state) {
  qmx::Rng rng(2);
  const auto iterations = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qmx::sample_mc(0.37, iterations, rng));
  state.SetItemsProcessed(state.iterations() * iterations);
}
BENCHMARK(BM_SampleMc)->RangeMultiplier(10)->Range(10, 100000);

void BM_SampleCdfContinuous(benchmark::State& state) {
  qmx::Rng rng(3);
  const auto shots = state.range(0);
  const auto inverse = [](double r) { return -std::log1p(-r); };
  for (auto _ : state) benchmark::DoNotOptimize(qmx::sample_cdf_continuous(inverse, shots, rng));
  state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_SampleCdfContinuous)->RangeMultiplier(10)->Range(10, 100000);

void BM_SampleCdfDiscrete(benchmark::State& state) {
  qmx::Rng rng(4);
  const std::vector<double> probs(static_cast<std::size_t>(state.range(0)), 1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qmx::sample_cdf_discrete(probs, 10000, rng));
}
BENCHMARK(BM_SampleCdfDiscrete)->Arg(4)->Arg(64)->Arg(256);

void BM_CompareBackends(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qmx::compare_backends(1000, state.range(0), 5));
}
BENCHMARK(BM_CompareBackends)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
