#pragma once

#include <random>

#include <gtest/gtest.h>

#include "qmx/qobject.hpp"

namespace qmx::test {

inline ::testing::AssertionResult near(const QObject& a, const QObject& b, double tol) {
  if (a.shape() != b.shape()) {
    return ::testing::AssertionFailure() << "shapes differ: " << a.rows() << "x" << a.cols() << " vs " << b.rows()
                                         << "x" << b.cols();
  }
  const double diff = max_abs_diff(a, b);
  if (diff <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max |a - b| = " << diff << " > " << tol;
}

/// Random complex d x d matrix with standard normal entries.
template <typename Rng>
Matrix random_matrix(int d, Rng& rng) {
  std::normal_distribution<double> n;
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = complex{n(rng), n(rng)};
  }
  return m;
}

/// Random full-rank density matrix G G^dagger / tr.
template <typename Rng>
QObject random_density(int d, Rng& rng) {
  const Matrix g = random_matrix(d, rng);
  return normalize(QObject(Matrix(g * g.adjoint())));
}

}  // namespace qmx::test
