#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "qmx/measurement.hpp"
#include "qmx/states.hpp"

namespace qmx {

/// Accept-reject simulation with N_c uniform draws per probability.
struct McBackend {
  std::int64_t iterations = 1000;
};

/// Inverse-transform sampling of each complete POVM.
struct CdfBackend {};

struct SamplerBackend {
  std::variant<McBackend, CdfBackend> variant = CdfBackend{};
  std::uint64_t seed = 0;
};

std::string_view backend_name(const SamplerBackend& backend) noexcept;

/// Fraction of N_c uniform draws r in [0, 1) with r < p.
double sample_mc(double p, std::int64_t iterations, Rng& rng);

/// y_i = F^{-1}(r_i) for `shots` uniform draws r_i in [0, 1).
std::vector<double> sample_cdf_continuous(const std::function<double(double)>& inverse_cdf,
                                          std::int64_t shots, Rng& rng);

/// Outcome counts from inverse-transform sampling on the cumulative sums.
/// Outcomes of zero probability are never drawn.
std::vector<std::int64_t> sample_cdf_discrete(std::span<const double> probs, std::int64_t shots, Rng& rng);

/// Empirical frequencies aligned with the set elements. The mc backend runs
/// its own N_c draws per element. The cdf backend draws `shots` outcomes per
/// group; an ungrouped element is sampled as the two-outcome event {p, 1-p}.
std::vector<double> measure_and_sample(const QObject& state, const MeasurementSet& set,
                                       const SamplerBackend& backend, std::int64_t shots);

/// f(x) = exp(-x) on a grid over [0, 5] estimated by both backends.
struct BackendComparison {
  std::vector<double> x;
  std::vector<double> exact;
  std::vector<double> mc;
  std::vector<double> cdf;
  double mc_seconds = 0.0;
  double cdf_seconds = 0.0;

  double mc_mean_abs_error() const;
  double cdf_mean_abs_error() const;
};

/// mc: sample_mc(f(x_i), iterations) at every grid point.
/// cdf: samples * iterations draws of y = -ln(1 - r); f(x_i) is estimated
/// as the fraction of draws with y > x_i (the survival function of the
/// exponential law equals f). Both backends spend the same number of draws.
BackendComparison compare_backends(int samples, std::int64_t iterations, std::uint64_t seed);

struct BackendTiming {
  std::int64_t iterations = 0;
  double mc_seconds = 0.0;
  double cdf_seconds = 0.0;
};

std::vector<BackendTiming> time_backends(int samples, std::span<const std::int64_t> iterations,
                                         std::uint64_t seed);

}  // namespace qmx
