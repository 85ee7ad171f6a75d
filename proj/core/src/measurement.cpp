#include "qmx/measurement.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace qmx {

namespace {

constexpr double kPsdTol = 1e-10;
constexpr double kCompletenessTol = 1e-8;
constexpr double kImpossible = 1e-14;

double min_eigenvalue(const QObject& e) {
  const Eigen::MatrixXcd a = e.data();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

// tr(A B) without forming the product.
complex trace_product(const Matrix& a, const Matrix& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace

std::string_view to_string(SetKind kind) noexcept {
  switch (kind) {
    case SetKind::Pauli: return "pauli";
    case SetKind::Stoke: return "stoke";
    case SetKind::MUB: return "mub";
    case SetKind::SIC: return "sic";
    case SetKind::Custom: return "custom";
  }
  return "unknown";
}

MeasurementSet::MeasurementSet(SetKind kind, std::vector<QObject> elements, std::vector<Group> groups)
    : kind_(kind), elements_(std::move(elements)), groups_(std::move(groups)) {
  if (elements_.empty()) raise(ErrorKind::InvalidParameter, "measurement set has no elements");
  const int d = elements_.front().rows();
  for (const auto& e : elements_) {
    if (!e.is_oper() || !e.is_square() || e.rows() != d) {
      raise(ErrorKind::DimensionMismatch, "POVM elements must be square operators of equal size");
    }
    if (!is_hermitian(e) || min_eigenvalue(e) < -kPsdTol) {
      raise(ErrorKind::NotPositive, "POVM element is not positive semidefinite");
    }
  }

  group_index_.assign(elements_.size(), std::nullopt);
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    Matrix sum = Matrix::Zero(d, d);
    for (std::size_t k : groups_[g]) {
      if (k >= elements_.size()) raise(ErrorKind::IndexOutOfRange, "group references a missing element");
      if (group_index_[k]) raise(ErrorKind::InvalidParameter, "element listed in two groups");
      group_index_[k] = g;
      sum += elements_[k].data();
    }
    const double err = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (err > kCompletenessTol) {
      raise(ErrorKind::InvalidParameter, "group " + std::to_string(g) + " does not sum to identity");
    }
  }
}

std::optional<std::size_t> MeasurementSet::group_of(std::size_t k) const {
  return group_index_.at(k);
}

std::vector<double> probabilities(const QObject& state, std::span<const QObject> observables) {
  const QObject rho = to_operator(state);
  std::vector<double> out;
  out.reserve(observables.size());
  for (const auto& obs : observables) {
    if (obs.shape() != rho.shape()) {
      raise(ErrorKind::DimensionMismatch, "observable and state dimensions differ");
    }
    const complex value = trace_product(obs.data(), rho.data());
    if (std::abs(value.imag()) > kHermitianTol) {
      raise(ErrorKind::NotHermitian, "expectation value has an imaginary part");
    }
    out.push_back(value.real());
  }
  return out;
}

std::vector<double> probabilities(const QObject& state, const MeasurementSet& set) {
  return probabilities(state, std::span<const QObject>(set.elements()));
}

PostMeasurement post_measurement_state(const QObject& state, const QObject& kraus) {
  const QObject rho = to_operator(state);
  if (kraus.shape() != rho.shape()) raise(ErrorKind::DimensionMismatch, "Kraus operator size");
  const Matrix& m = kraus.data();
  const double p = trace_product(m.adjoint() * m, rho.data()).real();
  if (!(p > kImpossible)) raise(ErrorKind::OutcomeImpossible, "outcome has zero probability");
  return {QObject(m * rho.data() * m.adjoint() / p), p};
}

MeasurementOutcome measure_kraus(const QObject& state, std::span<const QObject> kraus) {
  MeasurementOutcome out;
  const QObject rho = to_operator(state);
  for (const auto& m : kraus) {
    if (m.shape() != rho.shape()) raise(ErrorKind::DimensionMismatch, "Kraus operator size");
    const double p = trace_product(m.data().adjoint() * m.data(), rho.data()).real();
    out.probabilities.push_back(p);
    if (p > kImpossible) {
      out.post_states.emplace_back(post_measurement_state(rho, m).state);
    } else {
      out.post_states.emplace_back(std::nullopt);
    }
  }
  return out;
}

std::vector<QObject> kraus_operators(const MeasurementSet& set) {
  std::vector<QObject> out;
  out.reserve(set.size());
  for (const auto& e : set.elements()) out.push_back(mat_sqrt(e));
  return out;
}

TimedProbabilities timed_measurement(const QObject& state, const MeasurementSet& set) {
  const auto start = std::chrono::steady_clock::now();
  auto probs = probabilities(state, set);
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(probs), std::chrono::duration<double>(stop - start).count()};
}

}  // namespace qmx
