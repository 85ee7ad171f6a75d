#pragma once

#include <iosfwd>
#include <numbers>
#include <variant>
#include <vector>

#include "qmx/qobject.hpp"

namespace qmx {

/// alpha = x + iy over [x_min, x_max] x [y_min, y_max], endpoints included.
struct PlanarGrid {
  double x_min = -3.0;
  double x_max = 3.0;
  double y_min = -3.0;
  double y_max = 3.0;
  int nx = 101;
  int ny = 101;
};

/// (theta, phi) over [theta_min, theta_max] x [phi_min, phi_max], endpoints included.
struct SphericalGrid {
  double theta_min = 0.0;
  double theta_max = std::numbers::pi;
  double phi_min = 0.0;
  double phi_max = 2.0 * std::numbers::pi;
  int ntheta = 101;
  int nphi = 101;
};

enum class PhaseSpaceKind { Husimi, Wigner };

/// Sampled function. coord1 is the slow index (y or theta), coord2 the fast
/// one (x or phi); values are stored row-major, n1 rows of n2 entries.
struct PhaseSpaceGrid {
  PhaseSpaceKind kind = PhaseSpaceKind::Husimi;
  std::variant<PlanarGrid, SphericalGrid> coords;
  std::vector<double> coord1;
  std::vector<double> coord2;
  std::vector<double> values;

  int n1() const noexcept { return static_cast<int>(coord1.size()); }
  int n2() const noexcept { return static_cast<int>(coord2.size()); }
  bool spherical() const noexcept { return std::holds_alternative<SphericalGrid>(coords); }
  double at(int i1, int i2) const { return values.at(static_cast<std::size_t>(i1) * coord2.size() + i2); }
};

/// <j1 m1; j2 m2 | J M> with the Condon-Shortley phase.
double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M);

/// Orthonormal Y_kq(theta, phi) with the Condon-Shortley phase.
complex spherical_harmonic(int k, int q, double theta, double phi);

/// Q(alpha) = <alpha|rho|alpha> / pi with |alpha> truncated at dim(rho).
double husimi_planar(const QObject& rho, complex alpha);
/// W(alpha) = (2/pi) sum_k (-1)^k <k|D(alpha)^dagger rho D(alpha)|k>, k < dim(rho).
double wigner_planar(const QObject& rho, complex alpha);
/// Q(theta, phi) = <theta,phi|rho|theta,phi> / pi for spin j = (dim - 1) / 2.
double husimi_spherical(const QObject& rho, double theta, double phi);
/// sum_{k,q} rho_kq Y_kq(theta, phi), with
/// rho_kq = sum_{m,m'} rho_{m m'} (-1)^{j-m-q} <j m; j -m' | k q>.
complex wigner_spherical_value(const QObject& rho, double theta, double phi);

PhaseSpaceGrid husimi_planar(const QObject& rho, const PlanarGrid& grid);
PhaseSpaceGrid wigner_planar(const QObject& rho, const PlanarGrid& grid);
PhaseSpaceGrid husimi_spherical(const QObject& rho, const SphericalGrid& grid);
/// Real part of wigner_spherical_value on the grid.
PhaseSpaceGrid wigner_spherical(const QObject& rho, const SphericalGrid& grid);

/// Header `# kind=<husimi|wigner> coords=<planar|spherical> n1=<int> n2=<int>`,
/// then `coord1,coord2,value` rows with coord1 slow.
void write_grid_csv(std::ostream& out, const PhaseSpaceGrid& grid);

}  // namespace qmx
