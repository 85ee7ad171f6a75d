#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "qmx/measurement.hpp"

namespace qmx {

/// U(phi)|psi> for kets, U rho U^dagger for operators, U = exp(-i phi H).
QObject encode_phase(const QObject& state, const QObject& generator, double phi);

/// sum_k (dp_k/dphi)^2 / p_k for the POVM {E_k / c}, where sum_k E_k = c I,
/// with central differences of step dphi; terms with p_k < 1e-12 are dropped.
/// A set of G complete POVMs thus gives the mean of their informations.
/// Sets whose elements do not sum to a multiple of I raise InvalidParameter.
double classical_fisher(const std::function<QObject(double)>& state_at, const MeasurementSet& set, double phi,
                        double dphi);

/// 2 sum_{m,n} (q_m - q_n)^2 / (q_m + q_n) |<m|H|n>|^2 over pairs with q_m + q_n > 1e-12.
double quantum_fisher(const QObject& rho, const QObject& generator);

/// nullopt marks an unbounded bound (zero information).
struct CramerRaoBounds {
  std::optional<double> classical;
  std::optional<double> quantum;
};

CramerRaoBounds cramer_rao_bounds(double classical_info, double quantum_info, int repetitions);

/// Normalized |theta, phi> + |pi - theta, phi> for spin j.
QObject cat_state(double j, double theta, double phi);

/// Central differences inside, one-sided differences at both ends.
std::vector<double> central_difference(std::span<const double> y, std::span<const double> x);

/// sqrt(<A^2> - <A>^2) / |d<A>/dphi|; nullopt where |d<A>/dphi| <= 1e-12.
std::vector<std::optional<double>> error_propagation(std::span<const double> phis,
                                                     std::span<const double> expectation,
                                                     std::span<const double> second_moment);

struct MetrologyScenario {
  QObject probe;
  QObject generator;
  std::vector<double> phases;
  QObject observable;
  int repetitions = 1;
};

struct PrecisionCurve {
  std::vector<double> phis;
  std::vector<double> expectation;
  std::vector<double> variance;
  std::vector<std::optional<double>> delta_phi;
  double sql = 0.0;
  double hl = 0.0;

  /// Smallest defined delta_phi, if any.
  std::optional<double> min_delta_phi() const;
};

/// SQL = 1/sqrt(n) and HL = 1/n with n = dim(probe) - 1 spins (n = 2j).
PrecisionCurve run_scenario(const MetrologyScenario& scenario);

/// Spin-j cat probe (theta, phi = 0) with H = S_z, A = S_y and phases
/// t pi for `points` values of t evenly spaced over [0, t_max].
MetrologyScenario cat_scenario(double j, double theta, int points = 100, double t_max = 0.2);

/// Header `phi,expectation,variance,delta_phi,sql,hl`; undefined delta_phi is empty.
void write_curve_csv(std::ostream& out, const PrecisionCurve& curve);

}  // namespace qmx
