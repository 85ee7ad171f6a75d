#include "qmx/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "qmx/format.hpp"

namespace qmx {

namespace {

constexpr double kPsdTol = 1e-10;
constexpr double kRankTol = 1e-9;

using Hermitian = Eigen::MatrixXcd;

Hermitian hermitian_part(const QObject& x) {
  const Hermitian a = x.data();
  return 0.5 * (a + a.adjoint());
}

QObject square_state(const QObject& x) {
  QObject r = to_operator(x);
  if (!r.is_square()) raise(ErrorKind::DimensionMismatch, "state must be square");
  return r;
}

void require_same_dim(const QObject& a, const QObject& b) {
  if (a.shape() != b.shape()) raise(ErrorKind::DimensionMismatch, "states have different dimensions");
}

// Eigenvalues below 1e-14 are treated as exact zeros so that pure states
// do not pick up sqrt(eps) noise.
Hermitian psd_sqrt(const Hermitian& a) {
  Eigen::SelfAdjointEigenSolver<Hermitian> solver(a);
  Eigen::VectorXd r = solver.eigenvalues();
  for (auto& v : r) v = v > 1e-14 ? std::sqrt(v) : 0.0;
  return solver.eigenvectors() * r.asDiagonal() * solver.eigenvectors().adjoint();
}

Eigen::VectorXd eigenvalues(const Hermitian& a) {
  return Eigen::SelfAdjointEigenSolver<Hermitian>(a, Eigen::EigenvaluesOnly).eigenvalues();
}

void require_psd(const QObject& x) {
  if (!is_hermitian(x)) raise(ErrorKind::NotHermitian, "state is not Hermitian");
  if (eigenvalues(hermitian_part(x)).minCoeff() < -kPsdTol) {
    raise(ErrorKind::NotPositive, "state is not positive semidefinite");
  }
}

std::vector<double> normalized_frequencies(std::span<const double> f, const MeasurementSet& set) {
  if (f.size() != set.size()) raise(ErrorKind::DimensionMismatch, "one frequency per element expected");
  std::vector<double> out(f.begin(), f.end());
  for (const auto& group : set.groups()) {
    double total = 0.0;
    for (std::size_t k : group) total += f[k];
    if (!(total > 0.0)) raise(ErrorKind::InvalidDistribution, "group frequencies sum to zero");
    for (std::size_t k : group) out[k] = f[k] / total;
  }
  return out;
}

std::string shots_field(const TomographyRun& run) {
  if (const auto* n = std::get_if<std::int64_t>(&run.shots)) return std::to_string(*n);
  return "exact";
}

std::string backend_field(const TomographyRun& run) {
  if (std::holds_alternative<ExactShots>(run.shots)) return "exact";
  return std::string(backend_name(run.backend));
}

void write_json_object(std::ostream& out, const TomographyRun& run) {
  const bool exact = std::holds_alternative<ExactShots>(run.shots);
  out << "{\"dimension\":" << run.true_state.rows() << ",\"set_kind\":\"" << to_string(run.set.kind())
      << "\",\"shots\":" << (exact ? "\"exact\"" : shots_field(run)) << ",\"backend\":\"" << backend_field(run)
      << "\",\"seed\":" << run.backend.seed << ",\"fidelity\":" << format_real(run.scores.fidelity)
      << ",\"trace_distance\":" << format_real(run.scores.trace_distance) << '}';
}

}  // namespace

double trace_distance_pure(const QObject& psi, const QObject& phi) {
  if (!psi.is_ket() || !phi.is_ket()) raise(ErrorKind::InvalidObject, "expected kets");
  require_same_dim(psi, phi);
  const double overlap = std::norm((phi.data().adjoint() * psi.data())(0, 0));
  return std::sqrt(std::max(0.0, 1.0 - overlap));
}

double trace_distance(const QObject& rho, const QObject& sigma) {
  const QObject a = square_state(rho);
  const QObject b = square_state(sigma);
  require_same_dim(a, b);
  const QObject diff = a - b;
  if (!is_hermitian(diff)) raise(ErrorKind::NotHermitian, "trace distance needs Hermitian states");
  return 0.5 * eigenvalues(hermitian_part(diff)).cwiseAbs().sum();
}

double fidelity(const QObject& rho, const QObject& sigma) {
  const QObject a = square_state(rho);
  const QObject b = square_state(sigma);
  require_same_dim(a, b);
  require_psd(a);
  require_psd(b);
  // ||sqrt(rho) sqrt(sigma)||_1
  const Hermitian product = psd_sqrt(hermitian_part(a)) * psd_sqrt(hermitian_part(b));
  const double total = Eigen::JacobiSVD<Hermitian>(product).singularValues().sum();
  return std::clamp(total, 0.0, 1.0);
}

std::vector<QObject> gell_mann_basis(int d) {
  if (d < 1) raise(ErrorKind::InvalidParameter, "dimension must be >= 1");
  std::vector<QObject> out;
  const double r = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix s = Matrix::Zero(d, d);
      s(j, k) = r;
      s(k, j) = r;
      out.emplace_back(std::move(s));
      Matrix a = Matrix::Zero(d, d);
      a(j, k) = complex{0.0, -r};
      a(k, j) = complex{0.0, r};
      out.emplace_back(std::move(a));
    }
  }
  for (int l = 1; l < d; ++l) {
    Matrix g = Matrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int m = 0; m < l; ++m) g(m, m) = norm;
    g(l, l) = -l * norm;
    out.emplace_back(std::move(g));
  }
  return out;
}

QObject psd_project(const QObject& op) {
  if (!op.is_oper() || !op.is_square()) raise(ErrorKind::InvalidObject, "expected a square operator");
  Eigen::SelfAdjointEigenSolver<Hermitian> solver(hermitian_part(op));
  const Eigen::VectorXd clipped = solver.eigenvalues().cwiseMax(0.0);
  const double total = clipped.sum();
  if (!(total > 0.0)) raise(ErrorKind::ZeroNorm, "no positive eigenvalue left after projection");
  const Hermitian v = solver.eigenvectors();
  const Hermitian out = v * (clipped / total).cast<complex>().asDiagonal() * v.adjoint();
  return QObject(Matrix(0.5 * (out + out.adjoint())));
}

QObject reconstruct_linear_inversion(std::span<const double> frequencies, const MeasurementSet& set) {
  const int d = set.dim();
  const auto f = normalized_frequencies(frequencies, set);
  const auto basis = gell_mann_basis(d);
  const auto n = static_cast<Eigen::Index>(set.size());
  const auto m = static_cast<Eigen::Index>(basis.size());

  Eigen::MatrixXd a(n, m);
  Eigen::VectorXd b(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Matrix& e = set.elements()[static_cast<std::size_t>(k)].data();
    for (Eigen::Index c = 0; c < m; ++c) {
      a(k, c) = e.cwiseProduct(basis[static_cast<std::size_t>(c)].data().transpose()).sum().real();
    }
    b(k) = f[static_cast<std::size_t>(k)] - e.trace().real() / d;
  }

  if (m == 0) return QObject(Matrix::Identity(1, 1));
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> solver(a);
  solver.setThreshold(kRankTol);
  if (solver.rank() < m) {
    raise(ErrorKind::RankDeficientSet, "measurement set spans " + std::to_string(solver.rank()) + " of " +
                                           std::to_string(m) + " operator directions");
  }
  const Eigen::VectorXd coeffs = solver.solve(b);

  Matrix rho = Matrix::Identity(d, d) / static_cast<double>(d);
  for (Eigen::Index c = 0; c < m; ++c) rho += coeffs(c) * basis[static_cast<std::size_t>(c)].data();
  return psd_project(QObject(std::move(rho)));
}

TomographyRun run_tomography(const QObject& true_state, const MeasurementSet& set, Shots shots,
                             const SamplerBackend& backend, const Estimator& estimator) {
  const QObject rho = square_state(true_state);
  if (rho.rows() != set.dim()) raise(ErrorKind::DimensionMismatch, "state and set dimensions differ");
  std::vector<double> data;
  if (const auto* n = std::get_if<std::int64_t>(&shots)) {
    data = measure_and_sample(rho, set, backend, *n);
  } else {
    data = probabilities(rho, set);
  }
  QObject estimate = estimator(data, set);
  TomographyScores scores{trace_distance(rho, estimate), fidelity(rho, estimate)};
  return {rho, set, shots, backend, std::move(estimate), scores};
}

void write_report_json(std::ostream& out, const TomographyRun& run) {
  write_json_object(out, run);
  out << '\n';
}

void write_report_json(std::ostream& out, std::span<const TomographyRun> runs) {
  out << '[';
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i > 0) out << ',';
    out << "\n  ";
    write_json_object(out, runs[i]);
  }
  out << "\n]\n";
}

void write_report_csv(std::ostream& out, std::span<const TomographyRun> runs) {
  out << "dimension,set_kind,shots,backend,seed,fidelity,trace_distance\n";
  for (const auto& run : runs) {
    out << run.true_state.rows() << ',' << to_string(run.set.kind()) << ',' << shots_field(run) << ','
        << backend_field(run) << ',' << run.backend.seed << ',' << format_real(run.scores.fidelity) << ','
        << format_real(run.scores.trace_distance) << '\n';
  }
}

}  // namespace qmx
