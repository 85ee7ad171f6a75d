#include "qmx/phasespace.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "qmx/format.hpp"
#include "qmx/operators.hpp"
#include "qmx/states.hpp"

namespace qmx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxDirectFactorial = 170;
// Products of factorials stay finite in double below e^690.
constexpr double kMaxDirectLog = 690.0;

int twice(double x) {
  const double t = 2.0 * x;
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-9) raise(ErrorKind::InvalidQuantumNumber, "expected an integer or half-integer");
  return static_cast<int>(r);
}

double factorial(int n) {
  static const auto table = [] {
    std::vector<double> f(kMaxDirectFactorial + 1, 1.0);
    for (int i = 1; i <= kMaxDirectFactorial; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] * i;
    return f;
  }();
  return table[static_cast<std::size_t>(n)];
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) raise(ErrorKind::InvalidParameter, "grid needs at least one point per axis");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return out;
}

PhaseSpaceGrid make_grid(PhaseSpaceKind kind, const PlanarGrid& g) {
  if (g.x_max < g.x_min || g.y_max < g.y_min) raise(ErrorKind::InvalidParameter, "empty planar range");
  PhaseSpaceGrid out;
  out.kind = kind;
  out.coords = g;
  out.coord1 = linspace(g.y_min, g.y_max, g.ny);
  out.coord2 = linspace(g.x_min, g.x_max, g.nx);
  out.values.resize(out.coord1.size() * out.coord2.size());
  return out;
}

PhaseSpaceGrid make_grid(PhaseSpaceKind kind, const SphericalGrid& g) {
  if (g.theta_min < 0.0 || g.theta_max > kPi || g.theta_max < g.theta_min || g.phi_min < 0.0 ||
      g.phi_max > 2.0 * kPi || g.phi_max < g.phi_min) {
    raise(ErrorKind::InvalidParameter, "spherical range must lie within [0, pi] x [0, 2 pi]");
  }
  PhaseSpaceGrid out;
  out.kind = kind;
  out.coords = g;
  out.coord1 = linspace(g.theta_min, g.theta_max, g.ntheta);
  out.coord2 = linspace(g.phi_min, g.phi_max, g.nphi);
  out.values.resize(out.coord1.size() * out.coord2.size());
  return out;
}

template <typename F>
void fill(PhaseSpaceGrid& grid, F&& f) {
  std::size_t idx = 0;
  for (double c1 : grid.coord1) {
    for (double c2 : grid.coord2) grid.values[idx++] = f(c1, c2);
  }
}

QObject square_state(const QObject& rho) {
  QObject r = to_operator(rho);
  if (!r.is_square()) raise(ErrorKind::DimensionMismatch, "phase-space maps need a square state");
  return r;
}

double spin_of(const QObject& rho) { return (rho.rows() - 1) / 2.0; }

double expectation(const QObject& rho, const QObject& ket) {
  return (ket.data().adjoint() * rho.data() * ket.data())(0, 0).real();
}

double parity_expectation(const Matrix& rho, const Matrix& disp) {
  const Matrix moved = disp.adjoint() * rho * disp;
  double total = 0.0;
  for (Eigen::Index k = 0; k < moved.rows(); ++k) total += (k % 2 == 0 ? 1.0 : -1.0) * moved(k, k).real();
  return 2.0 / kPi * total;
}

// rho_kq indexed as [k][q + k].
using Multipoles = std::vector<std::vector<complex>>;

Multipoles multipoles(const QObject& rho) {
  const int d = rho.rows();
  const double j = spin_of(rho);
  Multipoles out(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    auto& row = out[static_cast<std::size_t>(k)];
    row.assign(static_cast<std::size_t>(2 * k + 1), complex{0.0, 0.0});
    for (int q = -k; q <= k; ++q) {
      complex total{0.0, 0.0};
      for (int a = 0; a < d; ++a) {
        const double m = j - a;
        // The coefficient vanishes unless m - m' = q.
        const double mp = m - q;
        if (mp < -j - 1e-9 || mp > j + 1e-9) continue;
        const int b = static_cast<int>(std::lround(j - mp));
        const int sign_exp = static_cast<int>(std::lround(j - m - q));
        const double sign = (sign_exp % 2 == 0) ? 1.0 : -1.0;
        total += rho(a, b) * sign * clebsch_gordan(j, m, j, -mp, k, q);
      }
      row[static_cast<std::size_t>(q + k)] = total;
    }
  }
  return out;
}

complex evaluate_multipoles(const Multipoles& rho_kq, double theta, double phi) {
  complex total{0.0, 0.0};
  for (std::size_t k = 0; k < rho_kq.size(); ++k) {
    const int kk = static_cast<int>(k);
    for (int q = -kk; q <= kk; ++q) {
      total += rho_kq[k][static_cast<std::size_t>(q + kk)] * spherical_harmonic(kk, q, theta, phi);
    }
  }
  return total;
}

}  // namespace

double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M) {
  const int tj1 = twice(j1), tm1 = twice(m1), tj2 = twice(j2), tm2 = twice(m2), tJ = twice(J), tM = twice(M);
  if (tj1 < 0 || tj2 < 0 || tJ < 0) raise(ErrorKind::InvalidQuantumNumber, "negative angular momentum");
  if (std::abs(tm1) > tj1 || (tj1 - tm1) % 2 != 0 || std::abs(tm2) > tj2 || (tj2 - tm2) % 2 != 0 ||
      std::abs(tM) > tJ || (tJ - tM) % 2 != 0) {
    raise(ErrorKind::InvalidQuantumNumber, "projection outside [-j, j] or of wrong parity");
  }
  if (tm1 + tm2 != tM) return 0.0;
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2 || (tj1 + tj2 - tJ) % 2 != 0) return 0.0;

  const int a = (tJ + tj1 - tj2) / 2, b = (tJ - tj1 + tj2) / 2, c = (tj1 + tj2 - tJ) / 2;
  const int e = (tj1 + tj2 + tJ) / 2 + 1;
  const int f1 = (tJ + tM) / 2, f2 = (tJ - tM) / 2;
  const int g1 = (tj1 - tm1) / 2, g2 = (tj1 + tm1) / 2, h1 = (tj2 - tm2) / 2, h2 = (tj2 + tm2) / 2;
  const int s1 = (tJ - tj2 + tm1) / 2, s2 = (tJ - tj1 - tm2) / 2;

  const int kmin = std::max({0, -s1, -s2});
  const int kmax = std::min({c, g1, h2});
  if (kmin > kmax) return 0.0;

  const double log_projections = log_factorial(f1) + log_factorial(f2) + log_factorial(g1) + log_factorial(g2) +
                                 log_factorial(h1) + log_factorial(h2);
  if (e <= kMaxDirectFactorial && log_projections < kMaxDirectLog && log_factorial(e) < kMaxDirectLog) {
    const double pre = std::sqrt((tJ + 1) * factorial(a) * factorial(b) * factorial(c) / factorial(e)) *
                       std::sqrt(factorial(f1) * factorial(f2) * factorial(g1) * factorial(g2) * factorial(h1) *
                                 factorial(h2));
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
      const double den = factorial(k) * factorial(c - k) * factorial(g1 - k) * factorial(h2 - k) *
                         factorial(s1 + k) * factorial(s2 + k);
      sum += (k % 2 == 0 ? 1.0 : -1.0) / den;
    }
    return pre * sum;
  }

  const double log_pre = 0.5 * (std::log(tJ + 1.0) + log_factorial(a) + log_factorial(b) + log_factorial(c) -
                                log_factorial(e) + log_factorial(f1) + log_factorial(f2) + log_factorial(g1) +
                                log_factorial(g2) + log_factorial(h1) + log_factorial(h2));
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const double log_den = log_factorial(k) + log_factorial(c - k) + log_factorial(g1 - k) +
                           log_factorial(h2 - k) + log_factorial(s1 + k) + log_factorial(s2 + k);
    sum += (k % 2 == 0 ? 1.0 : -1.0) * std::exp(log_pre - log_den);
  }
  return sum;
}

complex spherical_harmonic(int k, int q, double theta, double phi) {
  if (k < 0 || std::abs(q) > k) raise(ErrorKind::InvalidQuantumNumber, "need |q| <= k");
  const auto aq = static_cast<unsigned>(std::abs(q));
  const double legendre = std::sph_legendre(static_cast<unsigned>(k), aq, theta);
  const complex y = std::polar(legendre, static_cast<double>(aq) * phi);
  if (q >= 0) return y;
  return (aq % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

double husimi_planar(const QObject& rho, complex alpha) {
  const QObject r = square_state(rho);
  return expectation(r, coherent(r.rows(), alpha)) / kPi;
}

double wigner_planar(const QObject& rho, complex alpha) {
  const QObject r = square_state(rho);
  return parity_expectation(r.data(), displacement(r.rows(), alpha).data());
}

double husimi_spherical(const QObject& rho, double theta, double phi) {
  const QObject r = square_state(rho);
  return expectation(r, spin_coherent(spin_of(r), theta, phi)) / kPi;
}

complex wigner_spherical_value(const QObject& rho, double theta, double phi) {
  return evaluate_multipoles(multipoles(square_state(rho)), theta, phi);
}

PhaseSpaceGrid husimi_planar(const QObject& rho, const PlanarGrid& grid) {
  const QObject r = square_state(rho);
  auto out = make_grid(PhaseSpaceKind::Husimi, grid);
  fill(out, [&](double y, double x) { return expectation(r, coherent(r.rows(), {x, y})) / kPi; });
  return out;
}

PhaseSpaceGrid wigner_planar(const QObject& rho, const PlanarGrid& grid) {
  const QObject r = square_state(rho);
  auto out = make_grid(PhaseSpaceKind::Wigner, grid);
  fill(out, [&](double y, double x) { return parity_expectation(r.data(), displacement(r.rows(), {x, y}).data()); });
  return out;
}

PhaseSpaceGrid husimi_spherical(const QObject& rho, const SphericalGrid& grid) {
  const QObject r = square_state(rho);
  const double j = spin_of(r);
  auto out = make_grid(PhaseSpaceKind::Husimi, grid);
  fill(out, [&](double theta, double phi) { return expectation(r, spin_coherent(j, theta, phi)) / kPi; });
  return out;
}

PhaseSpaceGrid wigner_spherical(const QObject& rho, const SphericalGrid& grid) {
  const auto rho_kq = multipoles(square_state(rho));
  auto out = make_grid(PhaseSpaceKind::Wigner, grid);
  fill(out, [&](double theta, double phi) { return evaluate_multipoles(rho_kq, theta, phi).real(); });
  return out;
}

void write_grid_csv(std::ostream& out, const PhaseSpaceGrid& grid) {
  out << "# kind=" << (grid.kind == PhaseSpaceKind::Husimi ? "husimi" : "wigner")
      << " coords=" << (grid.spherical() ? "spherical" : "planar") << " n1=" << grid.n1() << " n2=" << grid.n2()
      << '\n';
  std::size_t idx = 0;
  for (double c1 : grid.coord1) {
    for (double c2 : grid.coord2) {
      out << format_real(c1) << ',' << format_real(c2) << ',' << format_real(grid.values[idx++]) << '\n';
    }
  }
}

}  // namespace qmx
