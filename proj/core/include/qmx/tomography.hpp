#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "qmx/measurement.hpp"
#include "qmx/sampling.hpp"

namespace qmx {

/// sqrt(1 - |<phi|psi>|^2) for unit kets.
double trace_distance_pure(const QObject& psi, const QObject& phi);
/// (1/2) sum |eigenvalues of rho - sigma|; kets are promoted.
double trace_distance(const QObject& rho, const QObject& sigma);
/// tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0, 1]; kets are promoted.
double fidelity(const QObject& rho, const QObject& sigma);

/// Orthonormal traceless Hermitian basis of d x d operators (generalized
/// Gell-Mann matrices), tr(G_a G_b) = delta_ab.
std::vector<QObject> gell_mann_basis(int d);

/// Clips negative eigenvalues of the Hermitian part to zero and renormalizes
/// the trace.
QObject psd_project(const QObject& op);

/// Least-squares solution of tr(E_k rho) = f_k over Hermitian unit-trace
/// rho, followed by psd_project. Frequencies of grouped elements are
/// normalized per group first. Throws RankDeficientSet when the set does
/// not determine rho.
QObject reconstruct_linear_inversion(std::span<const double> frequencies, const MeasurementSet& set);

using Estimator = std::function<QObject(std::span<const double>, const MeasurementSet&)>;

/// Exact probabilities instead of sampled frequencies.
struct ExactShots {};
using Shots = std::variant<std::int64_t, ExactShots>;

struct TomographyScores {
  double trace_distance = 0.0;
  double fidelity = 0.0;
};

struct TomographyRun {
  QObject true_state;
  MeasurementSet set;
  Shots shots;
  SamplerBackend backend;
  QObject reconstructed;
  TomographyScores scores;
};

TomographyRun run_tomography(const QObject& true_state, const MeasurementSet& set, Shots shots,
                             const SamplerBackend& backend,
                             const Estimator& estimator = reconstruct_linear_inversion);

/// Flat object {dimension, set_kind, shots, backend, seed, fidelity, trace_distance};
/// exact runs report shots as "exact" and backend as "exact".
void write_report_json(std::ostream& out, const TomographyRun& run);
void write_report_json(std::ostream& out, std::span<const TomographyRun> runs);
/// Header line plus one row per run, same fields as the JSON report.
void write_report_csv(std::ostream& out, std::span<const TomographyRun> runs);

}  // namespace qmx
