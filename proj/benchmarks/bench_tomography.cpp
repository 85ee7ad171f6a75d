#include <benchmark/benchmark.h>

#include "qmx/metrology.hpp"
#include "qmx/states.hpp"
#include "qmx/tomography.hpp"

namespace {

void BM_LinearInversionPauli(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto set = qmx::build_pauli_set(n);
  qmx::Rng rng(6);
  const auto freqs = qmx::probabilities(qmx::random_haar(1 << n, rng), set);
  for (auto _ : state) benchmark::DoNotOptimize(qmx::reconstruct_linear_inversion(freqs, set));
}
BENCHMARK(BM_LinearInversionPauli)->DenseRange(1, 3);

void BM_LinearInversionSic(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto set = qmx::build_sic_set(d);
  qmx::Rng rng(7);
  const auto freqs = qmx::probabilities(qmx::random_haar(d, rng), set);
  for (auto _ : state) benchmark::DoNotOptimize(qmx::reconstruct_linear_inversion(freqs, set));
}
BENCHMARK(BM_LinearInversionSic)->DenseRange(2, 8, 2);

void BM_SampledTomography(benchmark::State& state) {
  const auto set = qmx::build_pauli_set(2);
  const auto psi = qmx::ghz(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qmx::run_tomography(psi, set, std::int64_t{10000}, qmx::SamplerBackend{qmx::CdfBackend{}, 1}));
  }
}
BENCHMARK(BM_SampledTomography)->Unit(benchmark::kMicrosecond);

void BM_Fidelity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  qmx::Rng rng(8);
  const auto a = qmx::to_operator(qmx::random_haar(d, rng));
  const auto b = qmx::add_white_noise(qmx::random_haar(d, rng), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(qmx::fidelity(a, b));
}
BENCHMARK(BM_Fidelity)->Arg(4)->Arg(16);

void BM_CatCurve(benchmark::State& state) {
  const auto scenario = qmx::cat_scenario(10, 0.25 * 3.141592653589793);
  for (auto _ : state) benchmark::DoNotOptimize(qmx::run_scenario(scenario));
}
BENCHMARK(BM_CatCurve)->Unit(benchmark::kMillisecond);

}  // namespace
