#pragma once

#include <cstdint>
#include <random>
#include <variant>

#include "qmx/qobject.hpp"

namespace qmx {

/// Every random routine takes its generator explicitly; there is no global RNG.
using Rng = std::mt19937_64;

struct RandomAmplitudeNoise {
  double mean = 0.0;
  double stdev = 0.0;
};

struct WhiteNoise {
  double p = 0.0;
};

using NoiseSpec = std::variant<RandomAmplitudeNoise, WhiteNoise>;

QObject basis(int d, int k);
QObject dual_basis(int d, int k);

/// |j, m> in the Zeeman basis ordered m = j, ..., -j.
QObject zeeman(double j, double m);
QObject dual_zeeman(double j, double m);

/// Fock-space coherent state cut off at dimension d and renormalized.
QObject coherent(int d, complex alpha);
/// D(alpha) S(beta) |0> in a d-dimensional Fock space, normalized.
QObject squeezed(int d, complex alpha, complex beta);
/// Eigenvector of the truncated position quadrature closest to x.
QObject position_state(int d, double x);
QObject spin_coherent(double j, double theta, double phi);
QObject random_haar(int d, Rng& rng);

QObject ghz(int n);
QObject w(int n);
QObject dicke(int n, int k);

/// Adds independent complex Gaussian noise a + ib, a, b ~ N(mean, stdev), to
/// each amplitude and renormalizes.
QObject add_random_noise(const QObject& psi, double mean, double stdev, Rng& rng);
/// (1 - p) rho + p I / d; kets are promoted to density operators first.
QObject add_white_noise(const QObject& state, double p);
QObject apply_noise(const QObject& state, const NoiseSpec& noise, Rng& rng);

}  // namespace qmx
