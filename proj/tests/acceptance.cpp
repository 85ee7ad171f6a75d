// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "../tools/cli.hpp"
#include "qmx/measurement.hpp"
#include "qmx/metrology.hpp"
#include "qmx/operators.hpp"
#include "qmx/phasespace.hpp"
#include "qmx/sampling.hpp"
#include "qmx/states.hpp"
#include "qmx/tomography.hpp"

using namespace qmx;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass;
  std::string detail;
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

QObject random_density(int d, Rng& rng) {
  std::normal_distribution<double> n;
  Matrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = complex{n(rng), n(rng)};
  return normalize(QObject(Matrix(g * g.adjoint())));
}

QObject random_hermitian(int d, Rng& rng) {
  std::normal_distribution<double> n;
  Matrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = complex{n(rng), n(rng)};
  return QObject(Matrix(0.5 * (g + g.adjoint())));
}

double variance(const QObject& psi, const QObject& h) {
  const double m1 = dot(adjoint(psi), h, psi)(0, 0).real();
  const double m2 = dot(adjoint(psi), h, h, psi)(0, 0).real();
  return m2 - m1 * m1;
}

Verdict criterion_1() {
  const std::vector<QObject> sigma{pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z)};
  const auto p = probabilities(ghz(1), sigma);
  const double expected[] = {1.0, 0.0, 0.0};
  double err = 0.0;
  for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(p[i] - expected[i]));
  return {err <= 1e-12, "max error " + num(err)};
}

Verdict criterion_2() {
  std::vector<MeasurementSet> sets;
  for (int n = 1; n <= 4; ++n) {
    sets.push_back(build_pauli_set(n));
    sets.push_back(build_stoke_set(n));
  }
  for (int d : {2, 3, 4, 5, 7}) sets.push_back(build_mub_set(d));
  for (int d = 2; d <= 8; ++d) sets.push_back(build_sic_set(d));

  double completeness = 0.0;
  for (const auto& set : sets) {
    for (const auto& group : set.groups()) {
      Matrix sum = Matrix::Zero(set.dim(), set.dim());
      for (auto k : group) sum += set.elements()[k].data();
      completeness = std::max(completeness, (sum - Matrix::Identity(set.dim(), set.dim())).norm());
    }
  }

  double mub = 0.0;
  for (int d : {2, 3, 4, 5, 7}) {
    const auto bases = mub_bases(d);
    for (std::size_t a = 0; a < bases.size(); ++a)
      for (std::size_t b = a + 1; b < bases.size(); ++b)
        for (const auto& u : bases[a])
          for (const auto& v : bases[b]) {
            const double o = std::norm((u.data().adjoint() * v.data())(0, 0));
            mub = std::max(mub, std::abs(o - 1.0 / d));
          }
  }

  double sic = 0.0;
  for (int d = 2; d <= 8; ++d) {
    const auto set = build_sic_set(d);
    for (std::size_t a = 0; a < set.size(); ++a)
      for (std::size_t b = a + 1; b < set.size(); ++b) {
        const double o = (double(d * d) * (set.elements()[a].data() * set.elements()[b].data()).trace()).real();
        sic = std::max(sic, std::abs(o - 1.0 / (d + 1)));
      }
  }
  const bool ok = completeness <= 1e-8 && mub <= 1e-8 && sic <= 1e-6;
  return {ok, std::to_string(sets.size()) + " sets, completeness " + num(completeness) + ", mub " + num(mub) +
                  ", sic " + num(sic)};
}

Verdict criterion_3() {
  double mc = 0.0, cdf = 0.0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    const auto run = compare_backends(1000, 10000, static_cast<std::uint64_t>(s));
    mc += run.mc_mean_abs_error();
    cdf += run.cdf_mean_abs_error();
  }
  mc /= seeds;
  cdf /= seeds;
  return {mc <= 0.02 && cdf <= mc, "mc " + num(mc) + ", cdf " + num(cdf)};
}

Verdict criterion_4() {
  const auto pauli_set = build_pauli_set(3);
  const auto sic = build_sic_set(8);
  Rng rng(4);
  double tp = 0.0, ts = 0.0;
  const int states = 100;
  for (int i = 0; i < states; ++i) {
    const QObject rho = to_operator(random_haar(8, rng));
    tp += timed_measurement(rho, pauli_set).seconds;
    ts += timed_measurement(rho, sic).seconds;
  }
  return {tp > ts, "pauli " + num(tp / states) + " s, sic " + num(ts / states) + " s"};
}

Verdict criterion_5() {
  const auto pauli_set = build_pauli_set(2);
  const auto sic = build_sic_set(4);
  Rng rng(5);
  double worst_f = 1.0, worst_td = 0.0;
  for (int t = 0; t < 50; ++t) {
    const QObject psi = random_haar(4, rng);
    for (const auto* set : {&pauli_set, &sic}) {
      const auto run = run_tomography(psi, *set, ExactShots{}, SamplerBackend{});
      worst_f = std::min(worst_f, run.scores.fidelity);
      worst_td = std::max(worst_td, run.scores.trace_distance);
    }
  }
  double mean_pauli = 0.0, mean_sic = 0.0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    Rng state_rng(1000 + s);
    const QObject psi = random_haar(4, state_rng);
    const SamplerBackend backend{CdfBackend{}, static_cast<std::uint64_t>(s)};
    mean_pauli += run_tomography(psi, pauli_set, std::int64_t{10000}, backend).scores.fidelity / seeds;
    mean_sic += run_tomography(psi, sic, std::int64_t{10000}, backend).scores.fidelity / seeds;
  }
  const bool ok = worst_f >= 1.0 - 1e-9 && worst_td <= 1e-8 && mean_pauli >= 0.97 && mean_sic >= 0.97;
  return {ok, "exact min F " + num(worst_f) + ", max D " + num(worst_td) + "; sampled mean F pauli " +
                  num(mean_pauli) + ", sic " + num(mean_sic)};
}

Verdict criterion_6() {
  Rng rng(6);
  double qfi_err = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int d = t % 2 ? 2 : 3;
    const QObject psi = random_haar(d, rng);
    const QObject h = random_hermitian(d, rng);
    qfi_err = std::max(qfi_err, std::abs(quantum_fisher(psi, h) - 4.0 * variance(psi, h)));
  }

  double cfi_excess = -1e300;
  int scenarios = 0;
  const auto check = [&](const QObject& rho, const QObject& h, const MeasurementSet& set, double phi) {
    const auto state_at = [&](double p) { return encode_phase(rho, h, p); };
    const double f = classical_fisher(state_at, set, phi, 1e-4);
    cfi_excess = std::max(cfi_excess, f - quantum_fisher(encode_phase(rho, h, phi), h));
    ++scenarios;
  };
  for (int t = 0; t < 20; ++t) {
    const QObject rho = t % 2 ? to_operator(random_haar(2, rng)) : random_density(2, rng);
    check(rho, 0.5 * pauli(Axis::Z), build_sic_set(2), 0.4);
    check(rho, 0.5 * pauli(Axis::Z), build_mub_set(2), 0.4);
    check(to_operator(random_haar(3, rng)), spin(1, Axis::Z), build_sic_set(3), 0.9);
  }
  check(ghz(2), collective_spin(2, Axis::Z), build_pauli_set(2), 0.3);
  check(ghz(3), collective_spin(3, Axis::Z), build_pauli_set(3), 0.3);

  double ghz_err = 0.0;
  for (int n : {2, 3}) ghz_err = std::max(ghz_err, std::abs(quantum_fisher(ghz(n), collective_spin(n, Axis::Z)) - n * n));

  const bool ok = qfi_err <= 1e-8 && cfi_excess <= 1e-6 && ghz_err <= 1e-6;
  return {ok, "QFI vs 4Var " + num(qfi_err) + ", max F-Q over " + std::to_string(scenarios) + " scenarios " +
                  num(cfi_excess) + ", GHZ " + num(ghz_err)};
}

Verdict criterion_7() {
  const double sql = 1.0 / std::sqrt(20.0), hl = 1.0 / 20.0;
  const double thetas[] = {0.0, 0.15, 0.25, 0.35};
  double mins[4];
  std::string detail;
  for (int i = 0; i < 4; ++i) {
    const auto m = run_scenario(cat_scenario(10, thetas[i] * kPi)).min_delta_phi();
    mins[i] = m ? *m : std::numeric_limits<double>::infinity();
    detail += (i ? ", " : "") + num(thetas[i]) + "pi: " + (m ? num(*m) : std::string("undefined"));
  }
  bool ok = true;
  for (int i : {0, 1}) ok = ok && mins[i] < sql && mins[i] >= hl - 1e-9;
  for (int i : {2, 3}) ok = ok && mins[i] > mins[0];
  return {ok, "min delta phi " + detail + " (SQL " + num(sql) + ")"};
}

Verdict criterion_8() {
  const QObject vac = basis(30, 0);
  double husimi_err = 0.0, wigner_err = 0.0;
  for (int ix = -20; ix <= 20; ++ix)
    for (int iy = -20; iy <= 20; ++iy) {
      const complex a{0.1 * ix, 0.1 * iy};
      if (std::abs(a) > 2.0) continue;
      const double r2 = std::norm(a);
      husimi_err = std::max(husimi_err, std::abs(husimi_planar(vac, a) - std::exp(-r2) / kPi));
      wigner_err = std::max(wigner_err, std::abs(wigner_planar(vac, a) - 2.0 / kPi * std::exp(-2.0 * r2)));
    }

  double coherent_err = 0.0;
  for (const auto& [t, p] : {std::pair{0.7, 1.9}, {2.2, 4.0}, {1.3, 0.2}}) {
    coherent_err = std::max(coherent_err, std::abs(husimi_spherical(spin_coherent(3.5, t, p), t, p) - 1.0 / kPi));
  }

  const QObject dicke = to_operator(zeeman(10, 7));
  SphericalGrid grid;
  grid.ntheta = 61;
  grid.nphi = 21;
  const auto q = husimi_spherical(dicke, grid);
  const auto w = wigner_spherical(dicke, grid);
  double q_pole = 0.0, w_pole = 0.0;
  for (int i = 0; i < q.n2(); ++i) {
    q_pole = std::max({q_pole, std::abs(q.at(0, i)), std::abs(q.at(q.n1() - 1, i))});
    w_pole = std::max({w_pole, std::abs(w.at(0, i)), std::abs(w.at(w.n1() - 1, i))});
  }
  const auto interior_max = [](const PhaseSpaceGrid& g) {
    int best = 0;
    for (int r = 0; r < g.n1(); ++r)
      if (g.at(r, 0) > g.at(best, 0)) best = r;
    return best > 0 && best < g.n1() - 1;
  };
  const bool ok = husimi_err <= 1e-6 && wigner_err <= 1e-5 && coherent_err <= 1e-10 && q_pole <= 1e-12 &&
                  w_pole <= 1e-12 && interior_max(q) && interior_max(w);
  return {ok, "vacuum Q " + num(husimi_err) + ", vacuum W " + num(wigner_err) + ", spin Q peak " +
                  num(coherent_err) + ", |10,7> poles Q " + num(q_pole) + " W " + num(w_pole) +
                  ", interior max Q " + (interior_max(q) ? "yes" : "no") + " W " +
                  (interior_max(w) ? "yes" : "no")};
}

Verdict criterion_9() {
  Rng rng(9);
  std::uniform_int_distribution<int> dim(2, 8);
  const double tol = 1e-8;
  int violations = 0;
  for (int t = 0; t < 50; ++t) {
    const int d = dim(rng);
    const QObject a = t % 2 ? random_density(d, rng) : to_operator(random_haar(d, rng));
    const QObject b = t % 3 ? random_density(d, rng) : to_operator(random_haar(d, rng));
    const QObject c = random_density(d, rng);
    const double ab = trace_distance(a, b), f = fidelity(a, b);
    if (ab < -tol || trace_distance(a, a) > tol) ++violations;
    if (std::abs(ab - trace_distance(b, a)) > tol) ++violations;
    if (ab > trace_distance(a, c) + trace_distance(c, b) + tol) ++violations;
    if (std::abs(f - fidelity(b, a)) > tol || std::abs(fidelity(a, a) - 1.0) > tol) ++violations;
    if (1.0 - f > ab + tol || ab > std::sqrt(std::max(0.0, 1.0 - f * f)) + tol) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations over 50 pairs"};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Drops the trailing mean_seconds column of bench-povm rows.
std::string without_timing(const std::string& text) {
  std::istringstream in(text);
  std::string result;
  for (std::string line; std::getline(in, line);) result += line.substr(0, line.rfind(',')) + '\n';
  return result;
}

Verdict criterion_10() {
  const std::vector<std::vector<std::string>> commands{
      {"state", "random", "--d", "6", "--white-noise", "0.2", "--seed", "10"},
      {"state", "coherent", "--d", "10", "--alpha", "1,0.5", "--noise-mean", "0", "--noise-std", "0.1", "--seed", "10",
       "--format", "json"},
      {"measure", "random", "--d", "3", "--set", "mub", "--backend", "mc", "--shots", "200", "--seed", "10"},
      {"measure", "ghz", "--n", "3", "--set", "pauli", "--backend", "cdf", "--shots", "1000", "--seed", "10",
       "--format", "json"},
      {"backend-compare", "--samples", "200", "--iterations", "500", "--seed", "10"},
      {"phasespace", "squeezed", "--d", "20", "--alpha", "1", "--beta", "0.3", "--kind", "wigner", "--nx", "21",
       "--ny", "21"},
      {"phasespace", "dicke", "--n", "4", "--k", "1", "--coords", "spherical", "--ntheta", "11", "--nphi", "11",
       "--format", "json"},
      {"tomography", "random", "--d", "4", "--set", "pauli", "--shots", "1000", "--backend", "mc", "--repeats", "3",
       "--seed", "10"},
      {"tomography", "w", "--n", "2", "--set", "sic", "--shots", "500", "--seed", "10", "--format", "json"},
      {"metrology", "--points", "40", "--format", "json"},
  };
  int mismatches = 0;
  for (const auto& c : commands) {
    const auto a = cli(c), b = cli(c);
    if (a.code != 0 || a.out != b.out) ++mismatches;
  }
  const std::vector<std::string> bench{"bench-povm", "--repeats", "3", "--max-qubits", "2"};
  const auto ba = cli(bench), bb = cli(bench);
  if (ba.code != 0 || without_timing(ba.out) != without_timing(bb.out)) ++mismatches;

  const auto dir = std::filesystem::temp_directory_path() / "qmx_acceptance_metrology";
  std::string first;
  for (int rep = 0; rep < 2; ++rep) {
    std::filesystem::remove_all(dir);
    if (cli({"metrology", "--points", "30", "--out", dir.string()}).code != 0) ++mismatches;
    std::string all;
    for (const char* t : {"0", "0.15", "0.25", "0.35"}) all += slurp(dir / ("theta_" + std::string(t) + "pi.csv"));
    if (rep == 0) first = all;
    else if (all != first || all.empty()) ++mismatches;
  }
  std::filesystem::remove_all(dir);
  const std::size_t total = commands.size() + 2;
  return {mismatches == 0, std::to_string(total - mismatches) + "/" + std::to_string(total) +
                               " commands byte-identical (bench-povm timing column excluded)"};
}

struct Criterion {
  std::function<Verdict()> check;
  double limit_seconds;  // <= 0: no limit
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmx acceptance suite"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {criterion_1, 1e-3}, {criterion_2, 5},  {criterion_3, 30}, {criterion_4, 60}, {criterion_5, 120},
      {criterion_6, 10},   {criterion_7, 10}, {criterion_8, 30}, {criterion_9, 5},  {criterion_10, 0},
  };

  bool all = true;
  for (int i = 1; i <= 10; ++i) {
    if (only != 0 && only != i) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i - 1].check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double limit = criteria[i - 1].limit_seconds;
    if (limit > 0 && secs > limit) {
      v.pass = false;
      v.detail += "; over the " + num(limit) + " s limit";
    }
    std::cout << "criterion " << i << ": " << (v.pass ? "PASS" : "FAIL") << ' ' << v.detail << " (" << num(secs)
              << " s)" << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
