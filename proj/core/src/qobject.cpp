#include "qmx/qobject.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace qmx {

namespace {

using ColMatrix = Eigen::MatrixXcd;

Kind kind_from_shape(Eigen::Index rows, Eigen::Index cols) {
  if (rows == 1 && cols > 1) return Kind::Bra;
  if (cols == 1 && rows > 1) return Kind::Ket;
  return Kind::Oper;
}

void require_square_oper(const QObject& x, const char* op) {
  if (!x.is_oper() || !x.is_square()) {
    raise(ErrorKind::InvalidObject, std::string(op) + " requires a square operator");
  }
}

// Largest-magnitude component made real positive.
Eigen::VectorXcd fix_phase(Eigen::VectorXcd v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs > 0.0) v *= std::conj(v(best)) / best_abs;
  return v;
}

QObject ket_from(const Eigen::VectorXcd& v) {
  Matrix m(v.size(), 1);
  for (Eigen::Index i = 0; i < v.size(); ++i) m(i, 0) = v(i);
  return QObject(std::move(m));
}

bool descending(const complex& a, const complex& b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

const char* to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::Bra: return "bra";
    case Kind::Ket: return "ket";
    case Kind::Oper: return "oper";
  }
  return "unknown";
}

QObject::QObject(Matrix data) : data_(std::move(data)), kind_(Kind::Oper) {
  if (data_.size() == 0) raise(ErrorKind::InvalidObject, "empty matrix");
  kind_ = kind_from_shape(data_.rows(), data_.cols());
}

QObject QObject::ket(std::initializer_list<complex> amplitudes) {
  return ket(std::span<const complex>(amplitudes.begin(), amplitudes.size()));
}

QObject QObject::ket(std::span<const complex> amplitudes) {
  Matrix m(static_cast<Eigen::Index>(amplitudes.size()), 1);
  for (std::size_t i = 0; i < amplitudes.size(); ++i) m(static_cast<Eigen::Index>(i), 0) = amplitudes[i];
  return QObject(std::move(m));
}

QObject QObject::oper(std::initializer_list<std::initializer_list<complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.begin()->size());
  Matrix data(n, m);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != m) {
      raise(ErrorKind::InvalidObject, "ragged operator rows");
    }
    Eigen::Index c = 0;
    for (const auto& v : row) data(r, c++) = v;
    ++r;
  }
  return QObject(std::move(data));
}

int QObject::dim() const noexcept {
  return kind_ == Kind::Bra ? cols() : rows();
}

complex QObject::operator[](int i) const {
  if (kind_ == Kind::Ket) return data_(i, 0);
  if (kind_ == Kind::Bra) return data_(0, i);
  raise(ErrorKind::InvalidObject, "component access requires a bra or ket");
}

QObject operator+(const QObject& a, const QObject& b) {
  if (a.shape() != b.shape()) raise(ErrorKind::DimensionMismatch, "operand shapes differ in +");
  return QObject(a.data_ + b.data_);
}

QObject operator-(const QObject& a, const QObject& b) {
  if (a.shape() != b.shape()) raise(ErrorKind::DimensionMismatch, "operand shapes differ in -");
  return QObject(a.data_ - b.data_);
}

QObject operator-(const QObject& a) { return QObject(-a.data_); }
QObject operator*(complex s, const QObject& a) { return QObject(s * a.data_); }
QObject operator*(const QObject& a, complex s) { return QObject(a.data_ * s); }
QObject operator/(const QObject& a, complex s) { return QObject(a.data_ / s); }

std::pair<Kind, Shape> classify(const QObject& x) { return {x.kind(), x.shape()}; }

bool is_hermitian(const QObject& x, double tol) {
  if (!x.is_square()) return false;
  const Matrix& a = x.data();
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_normalized(const QObject& x, double tol) {
  if (x.is_oper()) return std::abs(x.data().trace() - complex(1.0)) <= tol;
  return std::abs(x.data().norm() - 1.0) <= tol;
}

QObject adjoint(const QObject& x) { return QObject(x.data().adjoint()); }
QObject conjugate(const QObject& x) { return QObject(x.data().conjugate()); }
QObject transpose(const QObject& x) { return QObject(x.data().transpose()); }

complex trace(const QObject& x) {
  require_square_oper(x, "trace");
  return x.data().trace();
}

EigenDecomposition eigen(const QObject& x) {
  require_square_oper(x, "eigen");
  const ColMatrix a = x.data();
  const auto n = a.rows();

  std::vector<complex> values(static_cast<std::size_t>(n));
  ColMatrix vecs(n, n);
  if (is_hermitian(x)) {
    const ColMatrix h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ColMatrix> solver(h);
    if (solver.info() != Eigen::Success) raise(ErrorKind::NotDiagonalizable, "eigensolver failed");
    for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    vecs = solver.eigenvectors();
  } else {
    Eigen::ComplexEigenSolver<ColMatrix> solver(a);
    if (solver.info() != Eigen::Success) raise(ErrorKind::NotDiagonalizable, "eigensolver failed");
    for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    vecs = solver.eigenvectors();
  }

  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return descending(values[i], values[j]); });

  EigenDecomposition out;
  out.values.reserve(values.size());
  out.vectors.reserve(values.size());
  for (std::size_t i : order) {
    out.values.push_back(values[i]);
    Eigen::VectorXcd v = vecs.col(static_cast<Eigen::Index>(i));
    v.normalize();
    out.vectors.push_back(ket_from(fix_phase(std::move(v))));
  }
  return out;
}

QObject ground(const QObject& x) {
  require_square_oper(x, "ground");
  if (!is_hermitian(x)) raise(ErrorKind::NotHermitian, "ground requires a Hermitian operator");
  auto dec = eigen(x);
  // Values are sorted descending; the minimum sits at the back. On exact
  // ties take the first index holding the minimum.
  const double lowest = dec.values.back().real();
  for (std::size_t i = 0; i < dec.values.size(); ++i) {
    if (dec.values[i].real() == lowest) return dec.vectors[i];
  }
  return dec.vectors.back();
}

QObject diagonalize(const QObject& x) {
  require_square_oper(x, "diagonalize");
  const auto dec = eigen(x);
  const auto n = static_cast<Eigen::Index>(dec.values.size());
  if (!is_hermitian(x)) {
    ColMatrix v(n, n);
    for (Eigen::Index i = 0; i < n; ++i) v.col(i) = dec.vectors[static_cast<std::size_t>(i)].data().col(0);
    Eigen::JacobiSVD<ColMatrix> svd(v);
    const auto& s = svd.singularValues();
    if (s(n - 1) <= 1e-10 * s(0)) raise(ErrorKind::NotDiagonalizable, "defective matrix");
  }
  Matrix d = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = dec.values[static_cast<std::size_t>(i)];
  return QObject(std::move(d));
}

QObject mat_exp(const QObject& x) {
  require_square_oper(x, "mat_exp");
  const ColMatrix a = x.data();
  const ColMatrix e = a.exp();
  return QObject(Matrix(e));
}

QObject mat_sqrt(const QObject& x) {
  require_square_oper(x, "mat_sqrt");
  if (!is_hermitian(x)) raise(ErrorKind::NotPositive, "mat_sqrt requires a Hermitian PSD operator");
  const ColMatrix a = x.data();
  Eigen::SelfAdjointEigenSolver<ColMatrix> solver(0.5 * (a + a.adjoint()));
  Eigen::VectorXd w = solver.eigenvalues();
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) < -1e-10) raise(ErrorKind::NotPositive, "negative eigenvalue in mat_sqrt");
    w(i) = std::sqrt(std::max(w(i), 0.0));
  }
  const ColMatrix& v = solver.eigenvectors();
  const ColMatrix r = v * w.asDiagonal() * v.adjoint();
  return QObject(Matrix(r));
}

double l2norm(const QObject& x) { return x.data().norm(); }

QObject normalize(const QObject& x) {
  if (x.is_oper()) {
    const complex tr = x.is_square() ? x.data().trace() : complex(0.0);
    if (std::abs(tr) == 0.0) raise(ErrorKind::ZeroNorm, "operator with zero trace");
    return x / tr;
  }
  const double n = x.data().norm();
  if (n == 0.0) raise(ErrorKind::ZeroNorm, "zero vector");
  return x / complex(n);
}

QObject to_operator(const QObject& x) {
  if (x.is_oper()) return x;
  const QObject v = normalize(x);
  if (v.is_ket()) return QObject(v.data() * v.data().adjoint());
  return QObject(v.data().adjoint() * v.data());
}

QObject dot(const QObject& a, const QObject& b) {
  if (a.cols() != b.rows()) {
    raise(ErrorKind::DimensionMismatch,
          "inner dimensions " + std::to_string(a.cols()) + " and " + std::to_string(b.rows()));
  }
  return QObject(a.data() * b.data());
}

QObject tensor(const QObject& a, const QObject& b) {
  const Matrix& x = a.data();
  const Matrix& y = b.data();
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return QObject(std::move(out));
}

QObject tensor(std::span<const QObject> factors) {
  if (factors.size() < 2) raise(ErrorKind::InvalidParameter, "tensor needs at least two factors");
  QObject acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i]);
  return acc;
}

QObject partial_trace(const QObject& x, std::span<const int> traced_qubits) {
  require_square_oper(x, "partial_trace");
  const int dim = x.rows();
  if (!is_power_of_two(dim)) raise(ErrorKind::NotQubitSystem, "dimension is not a power of two");
  int n = 0;
  while ((1 << n) < dim) ++n;

  std::vector<bool> traced(static_cast<std::size_t>(n), false);
  for (int q : traced_qubits) {
    if (q < 1 || q > n) raise(ErrorKind::IndexOutOfRange, "qubit index " + std::to_string(q));
    if (traced[static_cast<std::size_t>(q - 1)]) {
      raise(ErrorKind::IndexOutOfRange, "qubit index repeated: " + std::to_string(q));
    }
    traced[static_cast<std::size_t>(q - 1)] = true;
  }

  // Bit position (from the least significant end) of each qubit, big-endian.
  std::vector<int> keep_bits;
  std::vector<int> trace_bits;
  for (int q = 0; q < n; ++q) {
    (traced[static_cast<std::size_t>(q)] ? trace_bits : keep_bits).push_back(n - 1 - q);
  }
  const int nk = static_cast<int>(keep_bits.size());
  const int nt = static_cast<int>(trace_bits.size());

  auto scatter = [](int value, const std::vector<int>& bits) {
    // bits are listed from the most significant kept qubit downwards.
    int out = 0;
    const int count = static_cast<int>(bits.size());
    for (int i = 0; i < count; ++i) {
      if ((value >> (count - 1 - i)) & 1) out |= 1 << bits[static_cast<std::size_t>(i)];
    }
    return out;
  };

  const Matrix& a = x.data();
  Matrix out = Matrix::Zero(1 << nk, 1 << nk);
  for (int r = 0; r < (1 << nk); ++r) {
    const int rf = scatter(r, keep_bits);
    for (int c = 0; c < (1 << nk); ++c) {
      const int cf = scatter(c, keep_bits);
      complex sum = 0.0;
      for (int t = 0; t < (1 << nt); ++t) {
        const int tf = scatter(t, trace_bits);
        sum += a(rf | tf, cf | tf);
      }
      out(r, c) = sum;
    }
  }
  return QObject(std::move(out));
}

QObject partial_trace(const QObject& x, std::initializer_list<int> traced_qubits) {
  return partial_trace(x, std::span<const int>(traced_qubits.begin(), traced_qubits.size()));
}

double max_abs_diff(const QObject& a, const QObject& b) {
  if (a.shape() != b.shape()) raise(ErrorKind::DimensionMismatch, "shapes differ");
  return (a.data() - b.data()).cwiseAbs().maxCoeff();
}

}  // namespace qmx
