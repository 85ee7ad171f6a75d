#include <benchmark/benchmark.h>

#include "qmx/measurement.hpp"
#include "qmx/states.hpp"

namespace {

void BM_PauliProbabilities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto set = qmx::build_pauli_set(n);
  qmx::Rng rng(1);
  const auto rho = qmx::to_operator(qmx::random_haar(1 << n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(qmx::probabilities(rho, set));
  state.counters["elements"] = static_cast<double>(set.size());
}
BENCHMARK(BM_PauliProbabilities)->DenseRange(1, 4);

void BM_SicProbabilities(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto set = qmx::build_sic_set(d);
  qmx::Rng rng(1);
  const auto rho = qmx::to_operator(qmx::random_haar(d, rng));
  for (auto _ : state) benchmark::DoNotOptimize(qmx::probabilities(rho, set));
  state.counters["elements"] = static_cast<double>(set.size());
}
BENCHMARK(BM_SicProbabilities)->DenseRange(2, 8);

void BM_MubProbabilities(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto set = qmx::build_mub_set(d);
  qmx::Rng rng(1);
  const auto rho = qmx::to_operator(qmx::random_haar(d, rng));
  for (auto _ : state) benchmark::DoNotOptimize(qmx::probabilities(rho, set));
}
BENCHMARK(BM_MubProbabilities)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Arg(7);

void BM_BuildSicSet(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qmx::build_sic_set(d));
}
BENCHMARK(BM_BuildSicSet)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
