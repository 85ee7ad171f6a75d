#include "qmx/states.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "qmx/operators.hpp"

namespace qmx {

namespace {

int zeeman_index(double j, double m) {
  const int d = spin_dimension(j);
  const double offset = j - m;
  const double rounded = std::round(offset);
  if (std::abs(offset - rounded) > 1e-9 || rounded < 0.0 || rounded > d - 1) {
    raise(ErrorKind::InvalidQuantumNumber,
          "m = " + std::to_string(m) + " is not a projection of j = " + std::to_string(j));
  }
  return static_cast<int>(rounded);
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_qubits(int n) {
  if (n < 1 || n > 30) raise(ErrorKind::InvalidQuantumNumber, "qubit count must be in [1, 30]");
}

}  // namespace

QObject basis(int d, int k) {
  if (d < 1) raise(ErrorKind::InvalidParameter, "dimension must be >= 1");
  if (k < 0 || k >= d) raise(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(k));
  Matrix m = Matrix::Zero(d, 1);
  m(k, 0) = 1.0;
  return QObject(std::move(m));
}

QObject dual_basis(int d, int k) { return adjoint(basis(d, k)); }

QObject zeeman(double j, double m) {
  const int d = spin_dimension(j);
  const int index = zeeman_index(j, m);
  Matrix v = Matrix::Zero(d, 1);
  v(index, 0) = 1.0;
  return QObject(std::move(v));
}

QObject dual_zeeman(double j, double m) { return adjoint(zeeman(j, m)); }

QObject coherent(int d, complex alpha) {
  if (d < 1) raise(ErrorKind::InvalidParameter, "dimension must be >= 1");
  Matrix v(d, 1);
  // Recurrence c_n = c_{n-1} alpha / sqrt(n) avoids overflowing n!.
  complex c = std::exp(-0.5 * std::norm(alpha));
  v(0, 0) = c;
  for (int n = 1; n < d; ++n) {
    c *= alpha / std::sqrt(static_cast<double>(n));
    v(n, 0) = c;
  }
  return normalize(QObject(std::move(v)));
}

QObject squeezed(int d, complex alpha, complex beta) {
  if (d < 1) raise(ErrorKind::InvalidParameter, "dimension must be >= 1");
  if (d == 1) return basis(1, 0);
  const QObject vacuum = basis(d, 0);
  return normalize(dot(displacement(d, alpha), squeezing(d, beta), vacuum));
}

QObject position_state(int d, double x) {
  if (d < 2) raise(ErrorKind::InvalidParameter, "position states need d >= 2");
  const auto dec = eigen(position_operator(d));
  std::size_t best = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dec.values.size(); ++i) {
    const double gap = std::abs(dec.values[i].real() - x);
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  return dec.vectors[best];
}

QObject spin_coherent(double j, double theta, double phi) {
  const int d = spin_dimension(j);
  const int two_j = d - 1;
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Matrix v(d, 1);
  for (int i = 0; i < d; ++i) {
    // i = j - m, so j + m = 2j - i.
    const double coeff = std::sqrt(binomial(two_j, i));
    const double mag = coeff * std::pow(c, two_j - i) * std::pow(s, i);
    v(i, 0) = std::polar(mag, -static_cast<double>(i) * phi);
  }
  return QObject(std::move(v));
}

QObject random_haar(int d, Rng& rng) {
  if (d < 1) raise(ErrorKind::InvalidParameter, "dimension must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix v(d, 1);
  for (int i = 0; i < d; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i, 0) = complex(re, im);
  }
  return normalize(QObject(std::move(v)));
}

QObject ghz(int n) {
  require_qubits(n);
  const int dim = 1 << n;
  Matrix v = Matrix::Zero(dim, 1);
  v(0, 0) = 1.0 / std::sqrt(2.0);
  v(dim - 1, 0) = 1.0 / std::sqrt(2.0);
  return QObject(std::move(v));
}

QObject w(int n) { return dicke(n, 1); }

QObject dicke(int n, int k) {
  require_qubits(n);
  if (k < 0 || k > n) raise(ErrorKind::InvalidQuantumNumber, "excitation count out of range");
  const int dim = 1 << n;
  const double amp = 1.0 / std::sqrt(binomial(n, k));
  Matrix v = Matrix::Zero(dim, 1);
  for (int idx = 0; idx < dim; ++idx) {
    if (std::popcount(static_cast<unsigned>(idx)) == k) v(idx, 0) = amp;
  }
  // The single-term cases are exact basis vectors.
  if (k == 0 || k == n) v(k == 0 ? 0 : dim - 1, 0) = 1.0;
  return QObject(std::move(v));
}

QObject add_random_noise(const QObject& psi, double mean, double stdev, Rng& rng) {
  if (!psi.is_ket()) raise(ErrorKind::InvalidObject, "random amplitude noise needs a ket");
  if (!(stdev >= 0.0)) raise(ErrorKind::InvalidParameter, "noise stdev must be >= 0");
  Matrix v = psi.data();
  if (stdev == 0.0) {
    v.array() += complex(mean, mean);
  } else {
    std::normal_distribution<double> normal(mean, stdev);
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      const double a = normal(rng);
      const double b = normal(rng);
      v(i, 0) += complex(a, b);
    }
  }
  return normalize(QObject(std::move(v)));
}

QObject add_white_noise(const QObject& state, double p) {
  if (!(p >= 0.0 && p <= 1.0)) raise(ErrorKind::InvalidParameter, "white-noise p must lie in [0, 1]");
  const QObject rho = to_operator(state);
  if (!rho.is_square()) raise(ErrorKind::InvalidObject, "white noise needs a square operator");
  const int d = rho.rows();
  return QObject((1.0 - p) * rho.data() + (p / d) * Matrix::Identity(d, d));
}

QObject apply_noise(const QObject& state, const NoiseSpec& noise, Rng& rng) {
  if (const auto* amp = std::get_if<RandomAmplitudeNoise>(&noise)) {
    return add_random_noise(state, amp->mean, amp->stdev, rng);
  }
  return add_white_noise(state, std::get<WhiteNoise>(noise).p);
}

}  // namespace qmx
