#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qmx/format.hpp"
#include "qmx/measurement.hpp"
#include "qmx/metrology.hpp"
#include "qmx/operators.hpp"
#include "qmx/phasespace.hpp"
#include "qmx/sampling.hpp"
#include "qmx/states.hpp"
#include "qmx/tomography.hpp"

namespace qmx::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  app->add_option("--out", c.out, "output path (stdout when omitted)");
  app->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

const std::vector<std::string> kStateNames = {"basis",  "zeeman", "zbasis", "coherent", "squeezed", "position",
                                              "spin-coherent", "random", "ghz", "w", "dicke", "mixed"};

struct StateArgs {
  std::string name;
  int n = 0, k = 0, d = 0;
  double j = 0, m = 0, theta = 0, phi = 0, x = 0;
  std::string alpha = "0", beta = "0";
  double white = 0, noise_mean = 0, noise_std = 0;
  std::map<std::string, CLI::Option*> given;

  bool has(const std::string& flag) const { return given.at(flag)->count() > 0; }
  void need(const std::string& flag) const {
    if (!has(flag)) throw UsageError("state '" + name + "' needs " + flag);
  }
};

void add_state_options(CLI::App* app, StateArgs& s) {
  app->add_option("state", s.name, "state name")->required()->check(CLI::IsMember(kStateNames));
  s.given["--n"] = app->add_option("--n", s.n, "number of qubits");
  s.given["--k"] = app->add_option("--k", s.k, "basis index or excitation number");
  s.given["--d"] = app->add_option("--d", s.d, "dimension");
  s.given["--j"] = app->add_option("--j", s.j, "spin quantum number");
  s.given["--m"] = app->add_option("--m", s.m, "magnetic quantum number");
  s.given["--theta"] = app->add_option("--theta", s.theta, "polar angle (rad)");
  s.given["--phi"] = app->add_option("--phi", s.phi, "azimuthal angle (rad)");
  s.given["--x"] = app->add_option("--x", s.x, "position eigenvalue");
  s.given["--alpha"] = app->add_option("--alpha", s.alpha, "displacement RE[,IM]");
  s.given["--beta"] = app->add_option("--beta", s.beta, "squeezing RE[,IM]");
  s.given["--white-noise"] = app->add_option("--white-noise", s.white, "white-noise weight p");
  s.given["--noise-mean"] = app->add_option("--noise-mean", s.noise_mean, "random-amplitude noise mean");
  s.given["--noise-std"] = app->add_option("--noise-std", s.noise_std, "random-amplitude noise deviation");
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " '" + text + "'");
  }
  if (used != text.size()) throw UsageError("cannot parse " + what + " '" + text + "'");
  return v;
}

std::pair<double, double> parse_pair(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(what + " expects LO,HI");
  return {parse_real(text.substr(0, comma), what), parse_real(text.substr(comma + 1), what)};
}

complex parse_complex(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text, what), 0.0};
  return {parse_real(text.substr(0, comma), what), parse_real(text.substr(comma + 1), what)};
}

QObject build_state(const StateArgs& s, Rng& rng) {
  QObject state = [&]() -> QObject {
    const std::string& n = s.name;
    if (n == "basis") {
      s.need("--d");
      s.need("--k");
      return basis(s.d, s.k);
    }
    if (n == "zeeman" || n == "zbasis") {
      s.need("--j");
      s.need("--m");
      return zeeman(s.j, s.m);
    }
    if (n == "coherent") {
      s.need("--d");
      return coherent(s.d, parse_complex(s.alpha, "--alpha"));
    }
    if (n == "squeezed") {
      s.need("--d");
      return squeezed(s.d, parse_complex(s.alpha, "--alpha"), parse_complex(s.beta, "--beta"));
    }
    if (n == "position") {
      s.need("--d");
      return position_state(s.d, s.x);
    }
    if (n == "spin-coherent") {
      s.need("--j");
      return spin_coherent(s.j, s.theta, s.phi);
    }
    if (n == "random") {
      s.need("--d");
      return random_haar(s.d, rng);
    }
    if (n == "ghz") {
      s.need("--n");
      return ghz(s.n);
    }
    if (n == "w") {
      s.need("--n");
      return w(s.n);
    }
    if (n == "dicke") {
      s.need("--n");
      s.need("--k");
      return dicke(s.n, s.k);
    }
    if (n == "mixed") {
      s.need("--d");
      return normalize(identity(s.d));
    }
    throw UsageError("unknown state '" + n + "'");
  }();
  if (s.has("--noise-std") || s.has("--noise-mean")) {
    state = add_random_noise(state, s.noise_mean, s.noise_std, rng);
  }
  if (s.has("--white-noise")) state = add_white_noise(state, s.white);
  return state;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + c.out + "' for writing");
  file << text;
}

std::string json_array(const std::vector<double>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += format_real(values[i]);
  }
  return s + "]";
}

std::string json_array(const std::vector<std::optional<double>>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += values[i] ? format_real(*values[i]) : "null";
  }
  return s + "]";
}

// state ---------------------------------------------------------------------

struct StateCmd {
  Common common;
  StateArgs state;
};

int cmd_state(const StateCmd& a, std::ostream& out) {
  Rng rng(a.common.seed);
  const QObject s = build_state(a.state, rng);
  const Matrix& m = s.data();
  std::ostringstream text;
  const char* kind = to_string(s.kind());
  if (a.common.format == "json") {
    std::vector<double> re, im;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        re.push_back(m(r, c).real());
        im.push_back(m(r, c).imag());
      }
    }
    text << "{\"kind\":\"" << kind << "\",\"rows\":" << m.rows() << ",\"cols\":" << m.cols()
         << ",\"re\":" << json_array(re) << ",\"im\":" << json_array(im) << "}\n";
  } else {
    text << "# kind=" << kind << " rows=" << m.rows() << " cols=" << m.cols() << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (c > 0) text << ',';
        text << format_real(m(r, c).real()) << ',' << format_real(m(r, c).imag());
      }
      text << '\n';
    }
  }
  emit(a.common, text.str(), out);
  return kExitOk;
}

// measure -------------------------------------------------------------------

struct MeasureCmd {
  Common common;
  StateArgs state;
  std::string set;
  std::string backend = "exact";
  std::int64_t shots = 1000;
};

SamplerBackend make_backend(const std::string& name, std::int64_t shots, std::uint64_t seed) {
  SamplerBackend b;
  b.seed = seed;
  if (name == "mc") {
    b.variant = McBackend{shots};
  } else {
    b.variant = CdfBackend{};
  }
  return b;
}

int cmd_measure(const MeasureCmd& a, std::ostream& out) {
  Rng rng(a.common.seed);
  const QObject s = build_state(a.state, rng);
  std::vector<double> probs;
  std::vector<long long> groups;
  std::vector<double> freqs;
  const bool sampled = a.backend != "exact";

  if (a.set == "sigma") {
    if (s.dim() != 2) raise(ErrorKind::UnsupportedDimension, "sigma observables need a single qubit");
    if (sampled) raise(ErrorKind::InvalidParameter, "sigma observables are evaluated exactly only");
    const std::vector<QObject> obs = {pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z)};
    probs = probabilities(s, obs);
    groups.assign(obs.size(), -1);
  } else {
    const MeasurementSet set = build_set(a.set, s.dim());
    probs = probabilities(s, set);
    for (std::size_t k = 0; k < set.size(); ++k) {
      const auto g = set.group_of(k);
      groups.push_back(g ? static_cast<long long>(*g) : -1);
    }
    if (sampled) freqs = measure_and_sample(s, set, make_backend(a.backend, a.shots, a.common.seed), a.shots);
  }

  std::ostringstream text;
  if (a.common.format == "json") {
    text << "{\"set\":\"" << a.set << "\",\"backend\":\"" << a.backend << "\",\"shots\":"
         << (sampled ? std::to_string(a.shots) : "null") << ",\"seed\":" << a.common.seed << ",\"elements\":[";
    for (std::size_t k = 0; k < probs.size(); ++k) {
      if (k > 0) text << ',';
      text << "{\"element\":" << k << ",\"group\":" << groups[k] << ",\"probability\":" << format_real(probs[k]);
      if (sampled) text << ",\"frequency\":" << format_real(freqs[k]);
      text << '}';
    }
    text << "]}\n";
  } else {
    text << "element,group,probability" << (sampled ? ",frequency" : "") << '\n';
    for (std::size_t k = 0; k < probs.size(); ++k) {
      text << k << ',' << groups[k] << ',' << format_real(probs[k]);
      if (sampled) text << ',' << format_real(freqs[k]);
      text << '\n';
    }
  }
  emit(a.common, text.str(), out);
  return kExitOk;
}

// bench-povm ----------------------------------------------------------------

struct BenchCmd {
  Common common;
  int repeats = 100;
  int max_qubits = 3;
};

int cmd_bench_povm(const BenchCmd& a, std::ostream& out) {
  if (a.repeats < 1) throw UsageError("--repeats must be >= 1");
  struct Row {
    std::string set;
    int dim;
    std::size_t elements;
    double mean_seconds;
  };
  std::vector<std::pair<std::string, int>> plan;
  for (int n = 1; n <= a.max_qubits; ++n) plan.emplace_back("pauli", 1 << n);
  for (int n = 1; n <= a.max_qubits; ++n) plan.emplace_back("stoke", 1 << n);
  for (int d : {2, 3, 4, 5, 7}) plan.emplace_back("mub", d);
  for (int d = 2; d <= 8; ++d) plan.emplace_back("sic", d);

  Rng rng(a.common.seed);
  std::vector<Row> rows;
  for (const auto& [name, dim] : plan) {
    const MeasurementSet set = build_set(name, dim);
    double total = 0.0;
    for (int r = 0; r < a.repeats; ++r) total += timed_measurement(random_haar(dim, rng), set).seconds;
    rows.push_back({name, dim, set.size(), total / a.repeats});
  }

  std::ostringstream text;
  if (a.common.format == "json") {
    text << '[';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      text << (i > 0 ? "," : "") << "\n  {\"set\":\"" << rows[i].set << "\",\"dimension\":" << rows[i].dim
           << ",\"elements\":" << rows[i].elements << ",\"mean_seconds\":" << format_real(rows[i].mean_seconds)
           << '}';
    }
    text << "\n]\n";
  } else {
    text << "set,dimension,elements,mean_seconds\n";
    for (const auto& r : rows) {
      text << r.set << ',' << r.dim << ',' << r.elements << ',' << format_real(r.mean_seconds) << '\n';
    }
  }
  emit(a.common, text.str(), out);
  return kExitOk;
}

// backend-compare -----------------------------------------------------------

struct CompareCmd {
  Common common;
  int samples = 1000;
  std::int64_t iterations = 1000;
  std::string timing_out;
  std::vector<std::int64_t> timing_iterations = {10, 100, 1000, 10000};
};

int cmd_backend_compare(const CompareCmd& a, std::ostream& out) {
  const auto run = compare_backends(a.samples, a.iterations, a.common.seed);
  std::ostringstream text;
  if (a.common.format == "json") {
    text << "{\"samples\":" << a.samples << ",\"iterations\":" << a.iterations << ",\"seed\":" << a.common.seed
         << ",\"mc_mean_abs_error\":" << format_real(run.mc_mean_abs_error())
         << ",\"cdf_mean_abs_error\":" << format_real(run.cdf_mean_abs_error()) << ",\"x\":" << json_array(run.x)
         << ",\"exact\":" << json_array(run.exact) << ",\"mc\":" << json_array(run.mc)
         << ",\"cdf\":" << json_array(run.cdf) << "}\n";
  } else {
    text << "# mc_mean_abs_error=" << format_real(run.mc_mean_abs_error())
         << " cdf_mean_abs_error=" << format_real(run.cdf_mean_abs_error()) << '\n';
    text << "x,exact,mc,cdf\n";
    for (std::size_t i = 0; i < run.x.size(); ++i) {
      text << format_real(run.x[i]) << ',' << format_real(run.exact[i]) << ',' << format_real(run.mc[i]) << ','
           << format_real(run.cdf[i]) << '\n';
    }
  }
  emit(a.common, text.str(), out);

  if (!a.timing_out.empty()) {
    std::ostringstream timing;
    timing << "iterations,mc_seconds,cdf_seconds\n";
    for (const auto& row : time_backends(a.samples, a.timing_iterations, a.common.seed)) {
      timing << row.iterations << ',' << format_real(row.mc_seconds) << ',' << format_real(row.cdf_seconds)
             << '\n';
    }
    emit(Common{a.common.seed, a.timing_out, "csv"}, timing.str(), out);
  }
  return kExitOk;
}

// phasespace ----------------------------------------------------------------

struct PhaseCmd {
  Common common;
  StateArgs state;
  std::string kind = "husimi";
  std::string coords = "planar";
  int nx = 101, ny = 101, ntheta = 101, nphi = 101;
  std::string x_range = "-3,3", y_range = "-3,3";
  std::string theta_range, phi_range;
};

int cmd_phasespace(const PhaseCmd& a, std::ostream& out) {
  Rng rng(a.common.seed);
  const QObject s = build_state(a.state, rng);
  const bool husimi = a.kind == "husimi";
  PhaseSpaceGrid grid;
  if (a.coords == "planar") {
    PlanarGrid g;
    std::tie(g.x_min, g.x_max) = parse_pair(a.x_range, "--x-range");
    std::tie(g.y_min, g.y_max) = parse_pair(a.y_range, "--y-range");
    g.nx = a.nx;
    g.ny = a.ny;
    grid = husimi ? husimi_planar(s, g) : wigner_planar(s, g);
  } else {
    SphericalGrid g;
    if (!a.theta_range.empty()) std::tie(g.theta_min, g.theta_max) = parse_pair(a.theta_range, "--theta-range");
    if (!a.phi_range.empty()) std::tie(g.phi_min, g.phi_max) = parse_pair(a.phi_range, "--phi-range");
    g.ntheta = a.ntheta;
    g.nphi = a.nphi;
    grid = husimi ? husimi_spherical(s, g) : wigner_spherical(s, g);
  }

  std::ostringstream text;
  if (a.common.format == "json") {
    text << "{\"kind\":\"" << a.kind << "\",\"coords\":\"" << a.coords << "\",\"n1\":" << grid.n1()
         << ",\"n2\":" << grid.n2() << ",\"coord1\":" << json_array(grid.coord1)
         << ",\"coord2\":" << json_array(grid.coord2) << ",\"values\":" << json_array(grid.values) << "}\n";
  } else {
    write_grid_csv(text, grid);
  }
  emit(a.common, text.str(), out);
  return kExitOk;
}

// tomography ----------------------------------------------------------------

struct TomographyCmd {
  Common common;
  StateArgs state;
  std::string set;
  std::string shots = "1000";
  std::string backend = "cdf";
  int repeats = 1;
};

int cmd_tomography(const TomographyCmd& a, std::ostream& out) {
  if (a.repeats < 1) throw UsageError("--repeats must be >= 1");
  Shots shots = ExactShots{};
  std::int64_t n = 0;
  if (a.shots != "exact") {
    const double v = parse_real(a.shots, "--shots");
    if (v < 1 || v != std::floor(v)) throw UsageError("--shots must be a positive integer or 'exact'");
    n = static_cast<std::int64_t>(v);
    shots = n;
  }
  Rng rng(a.common.seed);
  const QObject truth = build_state(a.state, rng);
  const MeasurementSet set = build_set(a.set, truth.dim());
  std::vector<TomographyRun> runs;
  for (int r = 0; r < a.repeats; ++r) {
    runs.push_back(run_tomography(truth, set, shots, make_backend(a.backend, n, a.common.seed + r)));
  }
  std::ostringstream text;
  if (a.common.format == "json") {
    if (runs.size() == 1) {
      write_report_json(text, runs.front());
    } else {
      write_report_json(text, std::span<const TomographyRun>(runs));
    }
  } else {
    write_report_csv(text, runs);
  }
  emit(a.common, text.str(), out);
  return kExitOk;
}

// metrology -----------------------------------------------------------------

struct MetrologyCmd {
  Common common;
  double j = 10;
  std::vector<std::string> thetas = {"0", "0.15", "0.25", "0.35"};
  int points = 100;
  double t_max = 0.2;
};

int cmd_metrology(const MetrologyCmd& a, std::ostream& out) {
  std::vector<PrecisionCurve> curves;
  for (const auto& label : a.thetas) {
    const double theta = parse_real(label, "--thetas") * std::numbers::pi;
    curves.push_back(run_scenario(cat_scenario(a.j, theta, a.points, a.t_max)));
  }

  if (a.common.format == "json") {
    std::ostringstream text;
    text << '[';
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const auto& c = curves[i];
      text << (i > 0 ? "," : "") << "\n  {\"theta_over_pi\":" << format_real(parse_real(a.thetas[i], "--thetas")) << ",\"j\":" << format_real(a.j)
           << ",\"sql\":" << format_real(c.sql) << ",\"hl\":" << format_real(c.hl)
           << ",\"phi\":" << json_array(c.phis) << ",\"expectation\":" << json_array(c.expectation)
           << ",\"variance\":" << json_array(c.variance) << ",\"delta_phi\":" << json_array(c.delta_phi) << '}';
    }
    text << "\n]\n";
    emit(a.common, text.str(), out);
    return kExitOk;
  }

  if (a.common.out.empty()) {
    for (std::size_t i = 0; i < curves.size(); ++i) {
      out << "# theta=" << a.thetas[i] << "pi\n";
      write_curve_csv(out, curves[i]);
    }
    return kExitOk;
  }
  const std::filesystem::path dir(a.common.out);
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    std::ostringstream text;
    write_curve_csv(text, curves[i]);
    emit(Common{a.common.seed, (dir / ("theta_" + a.thetas[i] + "pi.csv")).string(), "csv"}, text.str(), out);
  }
  return kExitOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedDimension:
    case ErrorKind::InvalidParameter:
    case ErrorKind::InvalidQuantumNumber:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotQubitSystem:
      return kExitDomain;
    default:
      return kExitNumeric;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum measurement simulation toolkit", "qmx"};
  app.require_subcommand(1);

  StateCmd state;
  auto* state_app = app.add_subcommand("state", "write a state vector or density matrix");
  add_common(state_app, state.common);
  add_state_options(state_app, state.state);

  MeasureCmd measure;
  auto* measure_app = app.add_subcommand("measure", "probabilities or sampled frequencies of a measurement set");
  add_common(measure_app, measure.common);
  add_state_options(measure_app, measure.state);
  measure_app->add_option("--set", measure.set, "pauli, stoke, mub, sic or sigma")
      ->required()
      ->check(CLI::IsMember({"pauli", "stoke", "mub", "sic", "sigma"}));
  measure_app->add_option("--backend", measure.backend, "exact, mc or cdf")
      ->check(CLI::IsMember({"exact", "mc", "cdf"}))
      ->capture_default_str();
  measure_app->add_option("--shots", measure.shots, "shots per group (mc: iterations per element)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  BenchCmd bench;
  auto* bench_app = app.add_subcommand("bench-povm", "mean probability-evaluation time per measurement set");
  add_common(bench_app, bench.common);
  bench_app->add_option("--repeats", bench.repeats, "random states per set")->capture_default_str();
  bench_app->add_option("--max-qubits", bench.max_qubits, "largest qubit count for pauli/stoke")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();

  CompareCmd compare;
  auto* compare_app = app.add_subcommand("backend-compare", "estimate exp(-x) on [0, 5] with mc and cdf");
  add_common(compare_app, compare.common);
  compare_app->add_option("--samples", compare.samples, "grid points")->capture_default_str();
  compare_app->add_option("--iterations", compare.iterations, "draws per grid point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compare_app->add_option("--timing-out", compare.timing_out, "write backend timings to this CSV");
  compare_app->add_option("--timing-iterations", compare.timing_iterations, "iteration counts to time")
      ->delimiter(',')
      ->capture_default_str();

  PhaseCmd phase;
  auto* phase_app = app.add_subcommand("phasespace", "Husimi or Wigner function on a grid");
  add_common(phase_app, phase.common);
  add_state_options(phase_app, phase.state);
  phase_app->add_option("--kind", phase.kind, "husimi or wigner")
      ->check(CLI::IsMember({"husimi", "wigner"}))
      ->capture_default_str();
  phase_app->add_option("--coords", phase.coords, "planar or spherical")
      ->check(CLI::IsMember({"planar", "spherical"}))
      ->capture_default_str();
  phase_app->add_option("--nx", phase.nx)->capture_default_str();
  phase_app->add_option("--ny", phase.ny)->capture_default_str();
  phase_app->add_option("--ntheta", phase.ntheta)->capture_default_str();
  phase_app->add_option("--nphi", phase.nphi)->capture_default_str();
  phase_app->add_option("--x-range", phase.x_range, "LO,HI")->capture_default_str();
  phase_app->add_option("--y-range", phase.y_range, "LO,HI")->capture_default_str();
  phase_app->add_option("--theta-range", phase.theta_range, "LO,HI (default 0,pi)");
  phase_app->add_option("--phi-range", phase.phi_range, "LO,HI (default 0,2pi)");

  TomographyCmd tomo;
  auto* tomo_app = app.add_subcommand("tomography", "simulate, reconstruct and score a state");
  add_common(tomo_app, tomo.common);
  add_state_options(tomo_app, tomo.state);
  tomo_app->add_option("--set", tomo.set, "pauli, stoke, mub or sic")
      ->required()
      ->check(CLI::IsMember({"pauli", "stoke", "mub", "sic"}));
  tomo_app->add_option("--shots", tomo.shots, "shots per group, or 'exact'")->capture_default_str();
  tomo_app->add_option("--backend", tomo.backend, "mc or cdf")
      ->check(CLI::IsMember({"mc", "cdf"}))
      ->capture_default_str();
  tomo_app->add_option("--repeats", tomo.repeats, "runs with seeds seed, seed+1, ...")->capture_default_str();

  MetrologyCmd metro;
  auto* metro_app = app.add_subcommand("metrology", "spin-cat phase-estimation precision curves");
  add_common(metro_app, metro.common);
  metro_app->add_option("--j", metro.j, "spin quantum number")->capture_default_str();
  metro_app->add_option("--thetas", metro.thetas, "cat angles in units of pi")
      ->delimiter(',')
      ->capture_default_str();
  metro_app->add_option("--points", metro.points, "phase grid points")->capture_default_str();
  metro_app->add_option("--t-max", metro.t_max, "phase range end in units of pi")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*state_app) return cmd_state(state, out);
    if (*measure_app) return cmd_measure(measure, out);
    if (*bench_app) return cmd_bench_povm(bench, out);
    if (*compare_app) return cmd_backend_compare(compare, out);
    if (*phase_app) return cmd_phasespace(phase, out);
    if (*tomo_app) return cmd_tomography(tomo, out);
    if (*metro_app) return cmd_metrology(metro, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qmx::cli
