#include "qmx/operators.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qmx {

namespace {

constexpr complex kI{0.0, 1.0};

QObject spin_plus(double s) {
  const int d = spin_dimension(s);
  Matrix m = Matrix::Zero(d, d);
  // Row/column i holds m = s - i; S_+ |s,m> = sqrt(s(s+1) - m(m+1)) |s,m+1>.
  for (int i = 1; i < d; ++i) {
    const double mz = s - i;
    m(i - 1, i) = std::sqrt(s * (s + 1.0) - mz * (mz + 1.0));
  }
  return QObject(std::move(m));
}

}  // namespace

int spin_dimension(double s) {
  const double twice = 2.0 * s;
  const double rounded = std::round(twice);
  if (s < 0.0 || std::abs(twice - rounded) > 1e-9) {
    raise(ErrorKind::InvalidQuantumNumber, "spin must be a non-negative multiple of 1/2");
  }
  return static_cast<int>(rounded) + 1;
}

QObject identity(int d) {
  if (d < 1) raise(ErrorKind::InvalidParameter, "identity dimension must be >= 1");
  return QObject(Matrix::Identity(d, d));
}

QObject spin(double s, Axis axis) {
  const int d = spin_dimension(s);
  switch (axis) {
    case Axis::Z: {
      Matrix m = Matrix::Zero(d, d);
      for (int i = 0; i < d; ++i) m(i, i) = s - i;
      return QObject(std::move(m));
    }
    case Axis::Plus: return spin_plus(s);
    case Axis::Minus: return adjoint(spin_plus(s));
    case Axis::X: {
      const Matrix p = spin_plus(s).data();
      return QObject(0.5 * (p + p.adjoint()));
    }
    case Axis::Y: {
      const Matrix p = spin_plus(s).data();
      return QObject((p - p.adjoint()) / (2.0 * kI));
    }
  }
  raise(ErrorKind::InvalidParameter, "unknown spin axis");
}

std::array<QObject, 3> spin(double s) {
  return {spin(s, Axis::X), spin(s, Axis::Y), spin(s, Axis::Z)};
}

QObject pauli(Axis axis) {
  switch (axis) {
    case Axis::X: return QObject::oper({{0.0, 1.0}, {1.0, 0.0}});
    case Axis::Y: return QObject::oper({{0.0, -kI}, {kI, 0.0}});
    case Axis::Z: return QObject::oper({{1.0, 0.0}, {0.0, -1.0}});
    case Axis::Plus: return QObject::oper({{0.0, 1.0}, {0.0, 0.0}});
    case Axis::Minus: return QObject::oper({{0.0, 0.0}, {1.0, 0.0}});
  }
  raise(ErrorKind::InvalidParameter, "unknown Pauli axis");
}

QObject lowering(int d) {
  if (d < 2) raise(ErrorKind::InvalidParameter, "ladder operators need d >= 2");
  Matrix m = Matrix::Zero(d, d);
  for (int n = 1; n < d; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
  return QObject(std::move(m));
}

QObject raising(int d) { return adjoint(lowering(d)); }

QObject position_operator(int d) {
  const Matrix a = lowering(d).data();
  return QObject((a + a.adjoint()) / std::sqrt(2.0));
}

QObject displacement(int d, complex alpha) {
  if (d < 1) raise(ErrorKind::InvalidParameter, "displacement dimension must be >= 1");
  if (d == 1) return identity(1);
  const Matrix a = lowering(d).data();
  return mat_exp(QObject(alpha * a.adjoint() - std::conj(alpha) * a));
}

QObject squeezing(int d, complex beta) {
  const Matrix a = lowering(d).data();
  const Matrix a2 = a * a;
  return mat_exp(QObject(0.5 * (std::conj(beta) * a2 - beta * a2.adjoint())));
}

QObject collective_spin(int n, Axis axis) {
  if (n < 1) raise(ErrorKind::InvalidParameter, "need at least one qubit");
  const QObject half = 0.5 * pauli(axis);
  const int dim = 1 << n;
  Matrix total = Matrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    std::vector<QObject> factors(static_cast<std::size_t>(n), identity(2));
    factors[static_cast<std::size_t>(i)] = half;
    total += n == 1 ? half.data() : tensor(factors).data();
  }
  return QObject(std::move(total));
}

}  // namespace qmx
