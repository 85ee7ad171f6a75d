#include "qmx/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "qmx/format.hpp"
#include "qmx/operators.hpp"
#include "qmx/states.hpp"

namespace qmx {

namespace {

constexpr double kProbabilityCutoff = 1e-12;
constexpr double kPairCutoff = 1e-12;
constexpr double kFlatSlope = 1e-12;
constexpr double kPsdTol = 1e-10;

void require_hermitian(const QObject& h, const char* what) {
  if (!h.is_oper() || !h.is_square()) raise(ErrorKind::InvalidObject, std::string(what) + " must be an operator");
  if (!is_hermitian(h)) raise(ErrorKind::NotHermitian, std::string(what) + " must be Hermitian");
}

double expectation(const Matrix& rho, const Matrix& a) {
  return a.cwiseProduct(rho.transpose()).sum().real();
}

}  // namespace

QObject encode_phase(const QObject& state, const QObject& generator, double phi) {
  require_hermitian(generator, "generator");
  if (state.dim() != generator.rows() || state.is_bra()) {
    raise(ErrorKind::DimensionMismatch, "state and generator dimensions differ");
  }
  const QObject u = mat_exp(complex{0.0, -phi} * generator);
  if (state.is_ket()) return dot(u, state);
  return dot(u, state, adjoint(u));
}

double classical_fisher(const std::function<QObject(double)>& state_at, const MeasurementSet& set, double phi,
                        double dphi) {
  if (!(dphi > 0.0)) raise(ErrorKind::InvalidParameter, "dphi must be positive");
  const int d = set.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& e : set.elements()) sum += e.data();
  const double c = sum.trace().real() / d;
  if ((sum - c * Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-8) {
    raise(ErrorKind::InvalidParameter, "set elements do not sum to a multiple of the identity");
  }
  const auto p = probabilities(state_at(phi), set);
  const auto plus = probabilities(state_at(phi + dphi), set);
  const auto minus = probabilities(state_at(phi - dphi), set);
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < kProbabilityCutoff) continue;
    const double slope = (plus[k] - minus[k]) / (2.0 * dphi);
    total += slope * slope / p[k];
  }
  return total / c;
}

double quantum_fisher(const QObject& rho, const QObject& generator) {
  require_hermitian(generator, "generator");
  const QObject r = to_operator(rho);
  if (r.shape() != generator.shape()) raise(ErrorKind::DimensionMismatch, "state and generator dimensions differ");
  const Eigen::MatrixXcd a = r.data();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (a + a.adjoint()));
  const Eigen::VectorXd q = solver.eigenvalues();
  if (q.minCoeff() < -kPsdTol) raise(ErrorKind::NotPositive, "state is not positive semidefinite");
  const Eigen::MatrixXcd v = solver.eigenvectors();
  const Eigen::MatrixXcd h = v.adjoint() * Eigen::MatrixXcd(generator.data()) * v;
  double total = 0.0;
  for (Eigen::Index m = 0; m < q.size(); ++m) {
    for (Eigen::Index n = 0; n < q.size(); ++n) {
      const double s = q(m) + q(n);
      if (s <= kPairCutoff) continue;
      const double diff = q(m) - q(n);
      total += diff * diff / s * std::norm(h(m, n));
    }
  }
  return 2.0 * total;
}

CramerRaoBounds cramer_rao_bounds(double classical_info, double quantum_info, int repetitions) {
  if (repetitions < 1) raise(ErrorKind::InvalidParameter, "repetitions must be >= 1");
  if (classical_info < 0.0 || quantum_info < 0.0) raise(ErrorKind::InvalidParameter, "information must be >= 0");
  const auto bound = [&](double info) -> std::optional<double> {
    if (info <= 0.0) return std::nullopt;
    return 1.0 / std::sqrt(repetitions * info);
  };
  return {bound(classical_info), bound(quantum_info)};
}

QObject cat_state(double j, double theta, double phi) {
  if (theta < 0.0 || theta > std::numbers::pi) raise(ErrorKind::InvalidParameter, "theta must lie in [0, pi]");
  return normalize(spin_coherent(j, theta, phi) + spin_coherent(j, std::numbers::pi - theta, phi));
}

std::vector<double> central_difference(std::span<const double> y, std::span<const double> x) {
  if (y.size() != x.size()) raise(ErrorKind::DimensionMismatch, "grids are not aligned");
  const std::size_t n = y.size();
  if (n < 2) raise(ErrorKind::InvalidParameter, "need at least two points");
  std::vector<double> out(n);
  out[0] = (y[1] - y[0]) / (x[1] - x[0]);
  out[n - 1] = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (y[i + 1] - y[i - 1]) / (x[i + 1] - x[i - 1]);
  return out;
}

std::vector<std::optional<double>> error_propagation(std::span<const double> phis,
                                                     std::span<const double> expectation,
                                                     std::span<const double> second_moment) {
  if (second_moment.size() != expectation.size()) raise(ErrorKind::DimensionMismatch, "grids are not aligned");
  const auto slope = central_difference(expectation, phis);
  std::vector<std::optional<double>> out(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (std::abs(slope[i]) <= kFlatSlope) continue;
    const double var = std::max(second_moment[i] - expectation[i] * expectation[i], 0.0);
    out[i] = std::sqrt(var) / std::abs(slope[i]);
  }
  return out;
}

std::optional<double> PrecisionCurve::min_delta_phi() const {
  std::optional<double> best;
  for (const auto& v : delta_phi) {
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

PrecisionCurve run_scenario(const MetrologyScenario& s) {
  require_hermitian(s.generator, "generator");
  require_hermitian(s.observable, "observable");
  if (s.generator.shape() != s.observable.shape() || s.probe.dim() != s.generator.rows()) {
    raise(ErrorKind::DimensionMismatch, "probe, generator and observable dimensions differ");
  }
  if (s.repetitions < 1) raise(ErrorKind::InvalidParameter, "repetitions must be >= 1");
  if (s.phases.size() < 2) raise(ErrorKind::InvalidParameter, "phase grid needs at least two points");
  for (std::size_t i = 1; i < s.phases.size(); ++i) {
    if (!(s.phases[i] > s.phases[i - 1])) raise(ErrorKind::InvalidParameter, "phase grid must increase strictly");
  }
  const int spins = s.probe.dim() - 1;
  if (spins < 1) raise(ErrorKind::InvalidParameter, "probe needs dimension >= 2");

  PrecisionCurve curve;
  curve.phis = s.phases;
  const Matrix a = s.observable.data();
  const Matrix a2 = a * a;
  std::vector<double> second;
  for (double phi : s.phases) {
    const Matrix rho = to_operator(encode_phase(s.probe, s.generator, phi)).data();
    const double m1 = expectation(rho, a);
    const double m2 = expectation(rho, a2);
    curve.expectation.push_back(m1);
    second.push_back(m2);
    curve.variance.push_back(std::max(m2 - m1 * m1, 0.0));
  }
  curve.delta_phi = error_propagation(curve.phis, curve.expectation, second);
  curve.sql = 1.0 / std::sqrt(static_cast<double>(spins));
  curve.hl = 1.0 / spins;
  return curve;
}

MetrologyScenario cat_scenario(double j, double theta, int points, double t_max) {
  if (points < 2) raise(ErrorKind::InvalidParameter, "points must be >= 2");
  if (!(t_max > 0.0)) raise(ErrorKind::InvalidParameter, "t_max must be positive");
  std::vector<double> phases(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    phases[static_cast<std::size_t>(i)] = t_max * i / (points - 1) * std::numbers::pi;
  }
  return {cat_state(j, theta, 0.0), spin(j, Axis::Z), std::move(phases), spin(j, Axis::Y), 1};
}

void write_curve_csv(std::ostream& out, const PrecisionCurve& curve) {
  out << "phi,expectation,variance,delta_phi,sql,hl\n";
  for (std::size_t i = 0; i < curve.phis.size(); ++i) {
    out << format_real(curve.phis[i]) << ',' << format_real(curve.expectation[i]) << ','
        << format_real(curve.variance[i]) << ',' << format_real(curve.delta_phi[i]) << ','
        << format_real(curve.sql) << ',' << format_real(curve.hl) << '\n';
  }
}

}  // namespace qmx
