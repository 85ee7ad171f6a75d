#pragma once

#include <array>

#include "qmx/qobject.hpp"

namespace qmx {

enum class Axis { X, Y, Z, Plus, Minus };

/// 2s+1 for a spin quantum number s in {0, 1/2, 1, ...}.
/// Throws InvalidQuantumNumber when 2s is not a non-negative integer.
int spin_dimension(double s);

QObject identity(int d);

/// Spin-s operator in the Zeeman basis ordered m = s, s-1, ..., -s (hbar = 1).
QObject spin(double s, Axis axis);
/// (S_x, S_y, S_z).
std::array<QObject, 3> spin(double s);

/// sigma_x, sigma_y, sigma_z and sigma_{+/-} = (sigma_x +/- i sigma_y) / 2.
QObject pauli(Axis axis);

/// Truncated annihilation operator, a|n> = sqrt(n)|n-1>.
QObject lowering(int d);
QObject raising(int d);
/// (a + a^dagger) / sqrt(2) in the truncated Fock space.
QObject position_operator(int d);

/// exp(alpha a^dagger - conj(alpha) a), exponentiating the truncated generator.
QObject displacement(int d, complex alpha);
/// exp((conj(beta) a^2 - beta a^dagger^2) / 2), exponentiating the truncated generator.
QObject squeezing(int d, complex beta);

/// sum_i (1 x ... x sigma_axis/2 on qubit i x ... x 1) for n qubits.
QObject collective_spin(int n, Axis axis);

}  // namespace qmx
