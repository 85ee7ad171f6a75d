#include "qmx/sampling.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

namespace qmx {

namespace {

constexpr double kDistributionTol = 1e-8;
constexpr double kProbabilityTol = 1e-12;
// Decorrelates the cdf stream from the mc stream for the same user seed.
constexpr std::uint64_t kCdfStreamSalt = 0x9e3779b97f4a7c15ULL;

double uniform(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) raise(ErrorKind::InvalidParameter, std::string(what) + " must be >= 1");
}

double clamp_probability(double p) {
  if (!(p >= -kProbabilityTol && p <= 1.0 + kProbabilityTol)) {
    raise(ErrorKind::InvalidParameter, "probability outside [0, 1]: " + std::to_string(p));
  }
  return std::clamp(p, 0.0, 1.0);
}

double mean_abs_error(const std::vector<double>& a, const std::vector<double>& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
  return a.empty() ? 0.0 : total / static_cast<double>(a.size());
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> mc_curve(const std::vector<double>& exact, std::int64_t iterations, Rng& rng) {
  std::vector<double> out;
  out.reserve(exact.size());
  for (double p : exact) out.push_back(sample_mc(p, iterations, rng));
  return out;
}

std::vector<double> cdf_curve(const std::vector<double>& x, std::int64_t iterations, Rng& rng) {
  const auto n = x.size();
  const double step = n > 1 ? x[1] - x[0] : 1.0;
  const auto inverse = [](double r) { return -std::log1p(-r); };
  // counts[i] holds draws with x_i < y <= x_{i+1} (the last bin is open).
  std::vector<std::int64_t> counts(n, 0);
  std::int64_t below = 0;
  for (std::int64_t it = 0; it < iterations; ++it) {
    for (double y : sample_cdf_continuous(inverse, static_cast<std::int64_t>(n), rng)) {
      if (!(y > x[0])) {
        ++below;
        continue;
      }
      auto idx = static_cast<std::size_t>(std::ceil((y - x[0]) / step)) - 1;
      idx = std::min(idx, n - 1);
      counts[idx]++;
    }
  }
  const double total = static_cast<double>(iterations) * static_cast<double>(n);
  std::vector<double> out(n);
  std::int64_t above = 0;
  for (std::size_t i = n; i-- > 0;) {
    above += counts[i];
    out[i] = static_cast<double>(above) / total;
  }
  return out;
}

}  // namespace

std::string_view backend_name(const SamplerBackend& backend) noexcept {
  return std::holds_alternative<McBackend>(backend.variant) ? "mc" : "cdf";
}

double sample_mc(double p, std::int64_t iterations, Rng& rng) {
  require_positive(iterations, "iterations");
  if (!(p >= 0.0 && p <= 1.0)) raise(ErrorKind::InvalidParameter, "p must lie in [0, 1]");
  std::int64_t accepted = 0;
  for (std::int64_t i = 0; i < iterations; ++i) {
    if (uniform(rng) < p) ++accepted;
  }
  return static_cast<double>(accepted) / static_cast<double>(iterations);
}

std::vector<double> sample_cdf_continuous(const std::function<double(double)>& inverse_cdf,
                                          std::int64_t shots, Rng& rng) {
  require_positive(shots, "shots");
  std::vector<double> out(static_cast<std::size_t>(shots));
  for (auto& y : out) y = inverse_cdf(uniform(rng));
  return out;
}

std::vector<std::int64_t> sample_cdf_discrete(std::span<const double> probs, std::int64_t shots, Rng& rng) {
  require_positive(shots, "shots");
  if (probs.empty()) raise(ErrorKind::InvalidDistribution, "empty distribution");
  std::vector<double> cumulative(probs.size());
  double total = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (!(probs[k] >= -kProbabilityTol)) raise(ErrorKind::InvalidDistribution, "negative probability");
    total += std::max(probs[k], 0.0);
    cumulative[k] = total;
  }
  if (std::abs(total - 1.0) > kDistributionTol) {
    raise(ErrorKind::InvalidDistribution, "probabilities sum to " + std::to_string(total));
  }
  std::vector<std::int64_t> counts(probs.size(), 0);
  for (std::int64_t s = 0; s < shots; ++s) {
    const double r = uniform(rng) * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    counts[static_cast<std::size_t>(it - cumulative.begin())]++;
  }
  return counts;
}

std::vector<double> measure_and_sample(const QObject& state, const MeasurementSet& set,
                                       const SamplerBackend& backend, std::int64_t shots) {
  const auto probs = probabilities(state, set);
  Rng rng(backend.seed);
  std::vector<double> freqs(probs.size(), 0.0);

  if (const auto* mc = std::get_if<McBackend>(&backend.variant)) {
    for (std::size_t k = 0; k < probs.size(); ++k) {
      freqs[k] = sample_mc(clamp_probability(probs[k]), mc->iterations, rng);
    }
    return freqs;
  }

  require_positive(shots, "shots");
  for (const auto& group : set.groups()) {
    std::vector<double> local;
    local.reserve(group.size());
    for (std::size_t k : group) local.push_back(clamp_probability(probs[k]));
    const auto counts = sample_cdf_discrete(local, shots, rng);
    for (std::size_t i = 0; i < group.size(); ++i) {
      freqs[group[i]] = static_cast<double>(counts[i]) / static_cast<double>(shots);
    }
  }
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (set.group_of(k)) continue;
    const double p = clamp_probability(probs[k]);
    const std::array<double, 2> pair = {p, 1.0 - p};
    const auto counts = sample_cdf_discrete(pair, shots, rng);
    freqs[k] = static_cast<double>(counts[0]) / static_cast<double>(shots);
  }
  return freqs;
}

double BackendComparison::mc_mean_abs_error() const { return mean_abs_error(mc, exact); }
double BackendComparison::cdf_mean_abs_error() const { return mean_abs_error(cdf, exact); }

BackendComparison compare_backends(int samples, std::int64_t iterations, std::uint64_t seed) {
  if (samples < 2) raise(ErrorKind::InvalidParameter, "samples must be >= 2");
  require_positive(iterations, "iterations");
  BackendComparison out;
  out.x = linspace(0.0, 5.0, samples);
  out.exact.reserve(out.x.size());
  for (double x : out.x) out.exact.push_back(std::exp(-x));

  Rng mc_rng(seed);
  auto start = std::chrono::steady_clock::now();
  out.mc = mc_curve(out.exact, iterations, mc_rng);
  out.mc_seconds = seconds_since(start);

  Rng cdf_rng(seed ^ kCdfStreamSalt);
  start = std::chrono::steady_clock::now();
  out.cdf = cdf_curve(out.x, iterations, cdf_rng);
  out.cdf_seconds = seconds_since(start);
  return out;
}

std::vector<BackendTiming> time_backends(int samples, std::span<const std::int64_t> iterations,
                                         std::uint64_t seed) {
  std::vector<BackendTiming> out;
  for (std::int64_t n : iterations) {
    const auto run = compare_backends(samples, n, seed);
    out.push_back({n, run.mc_seconds, run.cdf_seconds});
  }
  return out;
}

}  // namespace qmx
