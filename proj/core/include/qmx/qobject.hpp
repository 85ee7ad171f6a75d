#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qmx/error.hpp"

namespace qmx {

using complex = std::complex<double>;
using Matrix = Eigen::Matrix<complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kNormTol = 1e-10;

enum class Kind { Bra, Ket, Oper };

struct Shape {
  int rows = 0;
  int cols = 0;
  friend bool operator==(const Shape&, const Shape&) = default;
};

const char* to_string(Kind kind) noexcept;

/// Dense complex matrix tagged as bra (1 x n), ket (n x 1) or operator.
///
/// A 1 x 1 object is classified as an operator so that inner products such
/// as dot(bra, ket) come back as a scalar operator. Objects are immutable:
/// every operation returns a new value.
class QObject {
 public:
  explicit QObject(Matrix data);

  /// Column vector from amplitudes.
  static QObject ket(std::initializer_list<complex> amplitudes);
  static QObject ket(std::span<const complex> amplitudes);
  /// Square operator from a row-major list of rows.
  static QObject oper(std::initializer_list<std::initializer_list<complex>> rows);

  const Matrix& data() const noexcept { return data_; }
  Kind kind() const noexcept { return kind_; }
  Shape shape() const noexcept {
    return {static_cast<int>(data_.rows()), static_cast<int>(data_.cols())};
  }
  int rows() const noexcept { return static_cast<int>(data_.rows()); }
  int cols() const noexcept { return static_cast<int>(data_.cols()); }
  /// Hilbert-space dimension: vector length for bra/ket, row count for operators.
  int dim() const noexcept;

  bool is_ket() const noexcept { return kind_ == Kind::Ket; }
  bool is_bra() const noexcept { return kind_ == Kind::Bra; }
  bool is_oper() const noexcept { return kind_ == Kind::Oper; }
  bool is_square() const noexcept { return data_.rows() == data_.cols(); }

  complex operator()(int row, int col) const { return data_(row, col); }
  /// Vector component (bra or ket).
  complex operator[](int i) const;

  friend QObject operator+(const QObject& a, const QObject& b);
  friend QObject operator-(const QObject& a, const QObject& b);
  friend QObject operator-(const QObject& a);
  friend QObject operator*(complex s, const QObject& a);
  friend QObject operator*(const QObject& a, complex s);
  friend QObject operator/(const QObject& a, complex s);

 private:
  Matrix data_;
  Kind kind_;
};

struct EigenDecomposition {
  std::vector<complex> values;
  std::vector<QObject> vectors;  // kets, aligned with values
};

// Classification and predicates.
std::pair<Kind, Shape> classify(const QObject& x);
bool is_hermitian(const QObject& x, double tol = kHermitianTol);
bool is_normalized(const QObject& x, double tol = kNormTol);

// Factor maps.
QObject adjoint(const QObject& x);
QObject conjugate(const QObject& x);
QObject transpose(const QObject& x);

complex trace(const QObject& x);

/// Eigenvalues sorted by descending real part (ties: descending imaginary part).
/// Each eigenvector has its largest-magnitude component made real positive.
EigenDecomposition eigen(const QObject& x);
/// Eigenvector of the smallest eigenvalue of a Hermitian operator.
QObject ground(const QObject& x);
/// Diagonal operator of eigenvalues in eigen() order.
QObject diagonalize(const QObject& x);

QObject mat_exp(const QObject& x);
QObject mat_sqrt(const QObject& x);

/// Euclidean norm for vectors, Frobenius norm for operators.
double l2norm(const QObject& x);
/// Unit 2-norm for vectors, unit trace for operators.
QObject normalize(const QObject& x);

/// |psi><psi| of the normalized vector; operators pass through unchanged.
QObject to_operator(const QObject& x);

QObject dot(const QObject& a, const QObject& b);

template <typename... Rest>
QObject dot(const QObject& a, const QObject& b, const Rest&... rest) {
  return dot(dot(a, b), rest...);
}

QObject tensor(std::span<const QObject> factors);
QObject tensor(const QObject& a, const QObject& b);

template <typename... Rest>
QObject tensor(const QObject& a, const QObject& b, const Rest&... rest) {
  return tensor(tensor(a, b), rest...);
}

/// Traces out the listed qubits (1-based, qubit 1 is the leftmost tensor
/// factor). Remaining qubits keep their original order.
QObject partial_trace(const QObject& x, std::span<const int> traced_qubits);
QObject partial_trace(const QObject& x, std::initializer_list<int> traced_qubits);

/// Elementwise maximum of |a - b|; shapes must agree.
double max_abs_diff(const QObject& a, const QObject& b);

}  // namespace qmx
