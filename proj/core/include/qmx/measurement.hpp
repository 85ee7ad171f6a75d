#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qmx/qobject.hpp"

namespace qmx {

enum class SetKind { Pauli, Stoke, MUB, SIC, Custom };

std::string_view to_string(SetKind kind) noexcept;

/// Ordered POVM elements plus the partition of element indices into
/// complete POVMs. The constructor checks that every element is PSD and
/// that each declared group resolves the identity.
class MeasurementSet {
 public:
  using Group = std::vector<std::size_t>;

  MeasurementSet(SetKind kind, std::vector<QObject> elements, std::vector<Group> groups);

  SetKind kind() const noexcept { return kind_; }
  const std::vector<QObject>& elements() const noexcept { return elements_; }
  const std::vector<Group>& groups() const noexcept { return groups_; }
  std::size_t size() const noexcept { return elements_.size(); }
  int dim() const noexcept { return elements_.front().rows(); }
  /// Index of the group containing element k, if any.
  std::optional<std::size_t> group_of(std::size_t k) const;

 private:
  SetKind kind_;
  std::vector<QObject> elements_;
  std::vector<Group> groups_;
  std::vector<std::optional<std::size_t>> group_index_;
};

struct MeasurementOutcome {
  std::vector<double> probabilities;
  /// Filled only by Kraus measurements; nullopt marks an impossible outcome.
  std::vector<std::optional<QObject>> post_states;
};

struct PostMeasurement {
  QObject state;
  double probability;
};

/// tr(E_k rho) for each operator; kets are promoted to |psi><psi|.
std::vector<double> probabilities(const QObject& state, std::span<const QObject> observables);
std::vector<double> probabilities(const QObject& state, const MeasurementSet& set);

/// M rho M^dagger / p with p = tr(M^dagger M rho).
PostMeasurement post_measurement_state(const QObject& state, const QObject& kraus);

/// Probabilities and collapsed states for a list of Kraus operators.
MeasurementOutcome measure_kraus(const QObject& state, std::span<const QObject> kraus);

/// Kraus operators M_k = sqrt(E_k) for the elements of a set.
std::vector<QObject> kraus_operators(const MeasurementSet& set);

MeasurementSet build_pauli_set(int qubits);
MeasurementSet build_stoke_set(int qubits);
/// d in {2, 3, 4, 5, 7}.
MeasurementSet build_mub_set(int d);
/// Orthonormal bases of build_mub_set, each as d kets.
std::vector<std::vector<QObject>> mub_bases(int d);

/// D_{j,k} = e^{i pi j k / d} sum_m w^{j m} |k + m mod d><m|, w = e^{2 pi i / d}.
QObject weyl_displacement(int d, int j, int k);
/// Normalized Weyl-Heisenberg SIC fiducial for d in [2, 8].
QObject sic_fiducial(int d);
MeasurementSet build_sic_set(int d);

/// Builds a set by name: "pauli" and "stoke" take the Hilbert-space
/// dimension, which must be a power of two; "mub" and "sic" take d.
MeasurementSet build_set(std::string_view name, int dim);

struct TimedProbabilities {
  std::vector<double> probabilities;
  double seconds;
};

TimedProbabilities timed_measurement(const QObject& state, const MeasurementSet& set);

}  // namespace qmx
