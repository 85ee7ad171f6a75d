#include <cmath>
#include <numbers>
#include <sstream>

#include "helpers.hpp"
#include "qmx/operators.hpp"
#include "qmx/phasespace.hpp"
#include "qmx/states.hpp"

namespace qmx {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(PhaseSpaceTest, ClebschGordanKnownValues) {
  EXPECT_NEAR(clebsch_gordan(0.5, 0.5, 0.5, 0.5, 1, 1), 1.0, 1e-15);
  EXPECT_NEAR(clebsch_gordan(0.5, 0.5, 0.5, -0.5, 0, 0), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(clebsch_gordan(1, 1, 1, 0, 2, 0), 0.0);
  EXPECT_EQ(clebsch_gordan(1, 0, 1, 0, 3, 0), 0.0);
  // sympy.physics.wigner oracle
  EXPECT_NEAR(clebsch_gordan(1, 1, 1, -1, 2, 0), 0.408248290463863, 1e-14);
  EXPECT_NEAR(clebsch_gordan(1.5, 0.5, 1, 0, 1.5, 0.5), 0.25819888974716115, 1e-14);
  EXPECT_NEAR(clebsch_gordan(10, 7, 10, -7, 5, 0), 0.23732719939700864, 1e-12);
  EXPECT_NEAR(clebsch_gordan(10, 3, 10, -1, 12, 2), -0.23144835744649642, 1e-12);
  EXPECT_NEAR(clebsch_gordan(3, -2, 2, 1, 4, -1), -0.5916079783099616, 1e-14);
  try {
    clebsch_gordan(0.3, 0.3, 0.5, 0.5, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidQuantumNumber);
  }
}

TEST(PhaseSpaceTest, ClebschGordanLargeSpinPath) {
  // beyond the direct-factorial range the log path must still be orthonormal
  double sum = 0.0;
  for (double m1 = -60; m1 <= 60; m1 += 1) {
    const double c = clebsch_gordan(60, m1, 60, -m1, 10, 0);
    sum += c * c;
  }
  EXPECT_NEAR(sum, 1.0, 1e-8);
}

TEST(PhaseSpaceTest, ClebschGordanOrthogonality) {
  for (int tj1 = 0; tj1 <= 6; ++tj1) {
    for (int tj2 = 0; tj2 <= 6; ++tj2) {
      const double j1 = tj1 / 2.0, j2 = tj2 / 2.0;
      for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
        for (int tJp = std::abs(tj1 - tj2); tJp <= tj1 + tj2; tJp += 2) {
          for (int tM = -std::min(tJ, tJp); tM <= std::min(tJ, tJp); tM += 2) {
            double sum = 0.0;
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
              const int tm2 = tM - tm1;
              if (std::abs(tm2) > tj2) continue;
              sum += clebsch_gordan(j1, tm1 / 2.0, j2, tm2 / 2.0, tJ / 2.0, tM / 2.0) *
                     clebsch_gordan(j1, tm1 / 2.0, j2, tm2 / 2.0, tJp / 2.0, tM / 2.0);
            }
            EXPECT_NEAR(sum, tJ == tJp ? 1.0 : 0.0, 1e-10);
          }
        }
      }
    }
  }
}

TEST(PhaseSpaceTest, SphericalHarmonicValues) {
  EXPECT_NEAR(std::abs(spherical_harmonic(0, 0, 1.1, 2.2) - 1.0 / (2.0 * std::sqrt(kPi))), 0.0, 1e-15);
  for (double th : {0.0, 0.4, 1.9, kPi}) {
    EXPECT_NEAR(spherical_harmonic(1, 0, th, 0.7).real(), std::sqrt(3.0 / (4 * kPi)) * std::cos(th), 1e-14);
  }
  // scipy.special oracle
  const struct {
    int k, q;
    double th, ph, re, im;
  } cases[] = {{2, 1, 0.7, 1.3, -0.10182444777429556, -0.36678209259077765},
               {3, -2, 2.1, 0.4, -0.2678465241435291, 0.2757851086300988},
               {5, 0, 1.0, 0.0, -0.004165993574292037, 0.0},
               {4, 4, 0.3, 5.9, 0.00012841096339348044, -0.003372714197305959}};
  for (const auto& c : cases) {
    const complex y = spherical_harmonic(c.k, c.q, c.th, c.ph);
    EXPECT_NEAR(y.real(), c.re, 1e-13);
    EXPECT_NEAR(y.imag(), c.im, 1e-13);
  }
  EXPECT_THROW(spherical_harmonic(2, 3, 0.1, 0.1), Error);
}

TEST(PhaseSpaceTest, SphericalHarmonicConjugation) {
  Rng rng(4);
  std::uniform_real_distribution<double> th(0, kPi), ph(0, 2 * kPi);
  for (int t = 0; t < 50; ++t) {
    const double a = th(rng), b = ph(rng);
    for (int k = 0; k <= 6; ++k) {
      for (int q = -k; q <= k; ++q) {
        const complex lhs = std::conj(spherical_harmonic(k, q, a, b));
        const complex rhs = (q % 2 == 0 ? 1.0 : -1.0) * spherical_harmonic(k, -q, a, b);
        EXPECT_LE(std::abs(lhs - rhs), 1e-10);
      }
    }
  }
}

// Gauss-Legendre nodes on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(static_cast<std::size_t>(n));
  w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = z;
    w[static_cast<std::size_t>(i)] = 2.0 / ((1 - z * z) * dp * dp);
  }
}

TEST(PhaseSpaceTest, SphericalHarmonicOrthonormality) {
  const int kmax = 8, nt = 12, np = 20;
  std::vector<double> x, w;
  gauss_legendre(nt, x, w);
  for (int k1 = 0; k1 <= kmax; ++k1) {
    for (int q1 = -k1; q1 <= k1; ++q1) {
      for (int k2 = k1; k2 <= kmax; ++k2) {
        for (int q2 = -k2; q2 <= k2; ++q2) {
          complex sum{0.0, 0.0};
          for (int i = 0; i < nt; ++i) {
            const double th = std::acos(x[static_cast<std::size_t>(i)]);
            for (int j = 0; j < np; ++j) {
              const double ph = 2 * kPi * j / np;
              sum += w[static_cast<std::size_t>(i)] * (2 * kPi / np) * std::conj(spherical_harmonic(k1, q1, th, ph)) *
                     spherical_harmonic(k2, q2, th, ph);
            }
          }
          EXPECT_NEAR(std::abs(sum - complex(k1 == k2 && q1 == q2 ? 1.0 : 0.0)), 0.0, 1e-6);
        }
      }
    }
  }
}

TEST(PhaseSpaceTest, VacuumHusimi) {
  const QObject vac = to_operator(basis(30, 0));
  EXPECT_NEAR(husimi_planar(vac, 0.0), 1.0 / kPi, 1e-15);
  PlanarGrid g;
  g.nx = g.ny = 41;
  const auto grid = husimi_planar(vac, g);
  double worst = 0.0;
  for (int i = 0; i < grid.n1(); ++i) {
    for (int j = 0; j < grid.n2(); ++j) {
      const double r2 = grid.coord1[static_cast<std::size_t>(i)] * grid.coord1[static_cast<std::size_t>(i)] +
                        grid.coord2[static_cast<std::size_t>(j)] * grid.coord2[static_cast<std::size_t>(j)];
      EXPECT_GE(grid.at(i, j), -1e-12);
      if (r2 <= 9.0) worst = std::max(worst, std::abs(grid.at(i, j) - std::exp(-r2) / kPi));
    }
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(PhaseSpaceTest, HusimiNormalization) {
  const QObject rho = to_operator(coherent(30, complex{0.5, -0.3}));
  PlanarGrid g{-5, 5, -5, 5, 201, 201};
  const auto grid = husimi_planar(rho, g);
  const double cell = (10.0 / 200) * (10.0 / 200);
  double sum = 0.0;
  for (int i = 0; i < grid.n1(); ++i) {
    for (int j = 0; j < grid.n2(); ++j) {
      const double y = grid.coord1[static_cast<std::size_t>(i)], x = grid.coord2[static_cast<std::size_t>(j)];
      if (x * x + y * y <= 25.0) sum += grid.at(i, j) * cell;
    }
  }
  EXPECT_NEAR(sum, 1.0, 1e-3);
}

TEST(PhaseSpaceTest, VacuumAndFockWigner) {
  const QObject vac = to_operator(basis(30, 0));
  for (double x = -2.0; x <= 2.0; x += 0.25) {
    for (double y = -2.0; y <= 2.0; y += 0.25) {
      const double r2 = x * x + y * y;
      if (r2 > 4.0) continue;
      EXPECT_NEAR(wigner_planar(vac, complex{x, y}), 2.0 / kPi * std::exp(-2 * r2), 1e-5);
    }
  }
  EXPECT_NEAR(wigner_planar(to_operator(basis(30, 1)), 0.0), -2.0 / kPi, 1e-12);
}

TEST(PhaseSpaceTest, SpinHusimi) {
  const double t0 = 1.1, p0 = 2.4;
  const QObject rho = to_operator(spin_coherent(3, t0, p0));
  EXPECT_NEAR(husimi_spherical(rho, t0, p0), 1.0 / kPi, 1e-10);
  const double j = 2.5;
  const QObject top = to_operator(zeeman(j, j));
  for (double th : {0.0, 0.5, 1.7, kPi}) {
    EXPECT_NEAR(husimi_spherical(top, th, 0.9), std::pow(std::cos(th / 2), 4 * j) / kPi, 1e-12);
  }
}

TEST(PhaseSpaceTest, DickeRingStructure) {
  const QObject rho = to_operator(zeeman(10, 7));
  SphericalGrid g;
  g.ntheta = 61;
  g.nphi = 7;
  const auto q = husimi_spherical(rho, g);
  int best = 0;
  for (int i = 0; i < q.n1(); ++i) {
    if (q.at(i, 0) > q.at(best, 0)) best = i;
    for (int jj = 1; jj < q.n2(); ++jj) EXPECT_NEAR(q.at(i, jj), q.at(i, 0), 1e-12);
  }
  EXPECT_LE(std::abs(q.at(0, 0)), 1e-12);
  EXPECT_LE(std::abs(q.at(q.n1() - 1, 0)), 1e-12);
  EXPECT_GT(best, 0);
  EXPECT_LT(best, q.n1() - 1);
}

TEST(PhaseSpaceTest, SphericalWignerOracle) {
  // k = 0 term only: rho_00 Y_00 = (1/sqrt 2)(1 / (2 sqrt pi))
  const QObject half = 0.5 * identity(2);
  const double expected = 1.0 / std::sqrt(2.0) / (2.0 * std::sqrt(kPi));
  for (double th : {0.0, 0.4, 2.0}) {
    const complex w = wigner_spherical_value(half, th, 1.3);
    EXPECT_NEAR(w.real(), expected, 1e-14);
    EXPECT_NEAR(w.imag(), 0.0, 1e-14);
  }
  // independent multipole sum (sympy CG + scipy Y_kq)
  const QObject dicke = to_operator(zeeman(10, 7));
  EXPECT_NEAR(wigner_spherical_value(dicke, 0.0, 0.3).real(), -2.1073012353917533, 1e-9);
  EXPECT_NEAR(wigner_spherical_value(dicke, kPi, 0.3).real(), -0.0005772281434936561, 1e-9);
  EXPECT_NEAR(wigner_spherical_value(dicke, 1.2, 0.3).real(), 0.0010338097732336482, 1e-9);
}

TEST(PhaseSpaceTest, SphericalWignerRealAndAxial) {
  Rng rng(6);
  const QObject rho = test::random_density(5, rng);
  SphericalGrid g;
  g.ntheta = 9;
  g.nphi = 9;
  for (double th = 0.0; th <= kPi; th += 0.5) {
    for (double ph = 0.0; ph <= 2 * kPi; ph += 0.7) {
      EXPECT_LE(std::abs(wigner_spherical_value(rho, th, ph).imag()), 1e-8);
    }
  }
  const auto w = wigner_spherical(to_operator(zeeman(2, 2)), g);
  for (int i = 0; i < w.n1(); ++i) {
    for (int jj = 1; jj < w.n2(); ++jj) EXPECT_NEAR(w.at(i, jj), w.at(i, 0), 1e-10);
  }
}

TEST(PhaseSpaceTest, Linearity) {
  Rng rng(8);
  const QObject a = test::random_density(4, rng), b = test::random_density(4, rng);
  const QObject mix = 0.5 * (a + b);
  PlanarGrid pg{-2, 2, -2, 2, 7, 7};
  SphericalGrid sg;
  sg.ntheta = sg.nphi = 7;
  const auto check = [](const PhaseSpaceGrid& m, const PhaseSpaceGrid& x, const PhaseSpaceGrid& y) {
    for (std::size_t i = 0; i < m.values.size(); ++i) {
      EXPECT_NEAR(m.values[i], 0.5 * (x.values[i] + y.values[i]), 1e-12);
    }
  };
  check(husimi_planar(mix, pg), husimi_planar(a, pg), husimi_planar(b, pg));
  check(wigner_planar(mix, pg), wigner_planar(a, pg), wigner_planar(b, pg));
  check(husimi_spherical(mix, sg), husimi_spherical(a, sg), husimi_spherical(b, sg));
  check(wigner_spherical(mix, sg), wigner_spherical(a, sg), wigner_spherical(b, sg));
}

TEST(PhaseSpaceTest, GridCsvFormat) {
  PlanarGrid g{-1, 1, -2, 2, 3, 5};
  const auto grid = husimi_planar(to_operator(basis(4, 0)), g);
  std::ostringstream out;
  write_grid_csv(out, grid);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# kind=husimi coords=planar n1=5 n2=3");
  int rows = 0;
  std::string first;
  while (std::getline(in, line)) {
    if (rows == 0) first = line;
    ++rows;
  }
  EXPECT_EQ(rows, 15);
  EXPECT_EQ(first.substr(0, 6), "-2,-1,");
  EXPECT_THROW(husimi_spherical(to_operator(basis(3, 0)), SphericalGrid{0, 4, 0, 1, 3, 3}), Error);
}

}  // namespace
}  // namespace qmx
