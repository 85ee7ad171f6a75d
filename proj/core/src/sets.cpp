#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "qmx/measurement.hpp"

namespace qmx {

namespace {

constexpr int kMaxSetQubits = 4;
constexpr double kSicSelfTestTol = 1e-6;
const complex kI{0.0, 1.0};

// |H>, |V>, |D>, |A>, |L>, |R>.
std::array<QObject, 6> polarization_kets() {
  const double r = 1.0 / std::sqrt(2.0);
  return {QObject::ket({1.0, 0.0}), QObject::ket({0.0, 1.0}), QObject::ket({r, r}),
          QObject::ket({r, -r}),    QObject::ket({r, r * kI}), QObject::ket({r, -r * kI})};
}

int qubits_for_dim(int dim) {
  int n = 0;
  while ((1 << n) < dim) ++n;
  if (dim < 2 || (1 << n) != dim) raise(ErrorKind::UnsupportedDimension, "dimension is not 2^n");
  return n;
}

void require_set_qubits(int n) {
  if (n < 1 || n > kMaxSetQubits) {
    raise(ErrorKind::UnsupportedDimension,
          "qubit count must lie in [1, " + std::to_string(kMaxSetQubits) + "]");
  }
}

// All n-fold tensor products of `local`, first qubit slowest.
std::vector<QObject> tensor_power(const std::vector<QObject>& local, int n) {
  std::vector<QObject> out = local;
  for (int q = 1; q < n; ++q) {
    std::vector<QObject> next;
    next.reserve(out.size() * local.size());
    for (const auto& a : out) {
      for (const auto& b : local) next.push_back(tensor(a, b));
    }
    out = std::move(next);
  }
  return out;
}

std::vector<MeasurementSet::Group> bases_as_groups(std::size_t bases, std::size_t per_basis) {
  std::vector<MeasurementSet::Group> groups(bases);
  for (std::size_t b = 0; b < bases; ++b) {
    for (std::size_t i = 0; i < per_basis; ++i) groups[b].push_back(b * per_basis + i);
  }
  return groups;
}

std::vector<std::vector<QObject>> mub_d4() {
  const complex i = kI;
  // Columns of each matrix are the basis vectors (times 1/2).
  const std::array<std::array<std::array<complex, 4>, 4>, 4> tables = {{
      {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}}},
      {{{1, -1, -i, -i}, {1, -1, i, i}, {1, 1, i, -i}, {1, 1, -i, i}}},
      {{{1, -i, -i, -1}, {1, -i, i, 1}, {1, i, i, -1}, {1, i, -i, 1}}},
      {{{1, -i, -1, -i}, {1, -i, 1, i}, {1, i, 1, -i}, {1, i, -1, i}}},
  }};
  std::vector<std::vector<QObject>> bases;
  std::vector<QObject> computational;
  for (int k = 0; k < 4; ++k) {
    Matrix v = Matrix::Zero(4, 1);
    v(k, 0) = 1.0;
    computational.emplace_back(std::move(v));
  }
  bases.push_back(std::move(computational));
  for (const auto& table : tables) {
    std::vector<QObject> basis;
    for (const auto& column : table) {
      Matrix v(4, 1);
      for (int r = 0; r < 4; ++r) v(r, 0) = 0.5 * column[static_cast<std::size_t>(r)];
      basis.emplace_back(std::move(v));
    }
    bases.push_back(std::move(basis));
  }
  return bases;
}

// Odd prime d: the computational basis plus the d quadratic-phase bases
// |v_b^a> = d^{-1/2} sum_n w^{a n^2 + b n} |n>, which are the eigenbases of
// the shift-and-clock products X Z^a.
std::vector<std::vector<QObject>> mub_odd_prime(int d) {
  std::vector<std::vector<QObject>> bases;
  std::vector<QObject> computational;
  for (int k = 0; k < d; ++k) {
    Matrix v = Matrix::Zero(d, 1);
    v(k, 0) = 1.0;
    computational.emplace_back(std::move(v));
  }
  bases.push_back(std::move(computational));
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a) {
    std::vector<QObject> basis;
    for (int b = 0; b < d; ++b) {
      Matrix v(d, 1);
      for (int n = 0; n < d; ++n) {
        const int exponent = (a * n * n + b * n) % d;
        v(n, 0) = std::polar(norm, 2.0 * std::numbers::pi * exponent / d);
      }
      basis.emplace_back(std::move(v));
    }
    bases.push_back(std::move(basis));
  }
  return bases;
}

// Numerical Weyl-Heisenberg fiducials, first component real positive. Each
// satisfies |<phi|D_{j,k}|phi>|^2 = 1/(d+1) for (j,k) != (0,0) to ~1e-15
// under the phase convention of weyl_displacement.
const std::vector<std::vector<complex>>& numeric_fiducials() {
  static const std::vector<std::vector<complex>> table = {
      // d = 4
      {{0.20118858648686602, 0.0},
       {-0.10644596661905392, 0.74269551036289572},
       {6.7502911171854325e-16, -0.48571221409126397},
       {0.30763455310591925, -0.25698329627163163}},
      // d = 5
      {{0.41610141434549058, 0.0},
       {-0.66936696979523447, 0.21131161460602343},
       {-0.24161468845873973, 0.005576610563819074},
       {-0.078176640960727448, 0.18401891673523338},
       {-0.10512082278891155, -0.47404765762832346}},
      // d = 6
      {{0.089806665637803845, 0.0},
       {-0.24703588271547569, -0.056313643601868378},
       {-0.24862850471776687, 0.46176661540476621},
       {0.61714381299104559, -0.044264339777036484},
       {0.15856523786687368, 0.052583753974606177},
       {-0.47595215451124739, 0.12420954724560877}},
      // d = 7
      {{0.61870765349542856, 0.0},
       {0.27929540727144586, -0.11351884115521024},
       {-0.20866020013352551, -0.40859449373417855},
       {0.040403885889303492, -0.46470055806433525},
       {0.096902681411662514, 0.18056734059003948},
       {-0.025383998297946377, -0.13109177190694066},
       {0.17807042683717511, -0.081899905362145253}},
      // d = 8
      {{0.60044826695211839, 0.0},
       {-0.020500915914094045, -0.45899278512709063},
       {0.092475835769741652, 0.16484726900751023},
       {0.026227221095646937, -0.2238689219841786},
       {-0.2753580813055776, 0.14709988085084372},
       {-0.25642929776744749, -0.020834696538623625},
       {0.35920091474266691, -0.20956239653556008},
       {-0.037782551187591704, 0.061773109982652653}},
  };
  return table;
}

QObject raw_fiducial(int d) {
  switch (d) {
    case 2: {
      // Bloch vector (1,1,1)/sqrt(3).
      const double a = std::acos(1.0 / std::sqrt(3.0));
      return QObject::ket({std::cos(a / 2.0), std::polar(std::sin(a / 2.0), std::numbers::pi / 4.0)});
    }
    case 3: {
      const double r = 1.0 / std::sqrt(2.0);
      return QObject::ket({0.0, r, -r});
    }
    default: {
      const auto& amps = numeric_fiducials().at(static_cast<std::size_t>(d - 4));
      return normalize(QObject::ket(std::span<const complex>(amps)));
    }
  }
}

double sic_overlap_error(int d, const QObject& phi) {
  double worst = 0.0;
  const double target = 1.0 / (d + 1);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      if (j == 0 && k == 0) continue;
      const complex ov = (phi.data().adjoint() * weyl_displacement(d, j, k).data() * phi.data())(0, 0);
      worst = std::max(worst, std::abs(std::norm(ov) - target));
    }
  }
  return worst;
}

}  // namespace

MeasurementSet build_pauli_set(int qubits) {
  require_set_qubits(qubits);
  std::vector<QObject> local;
  for (const auto& k : polarization_kets()) local.push_back(to_operator(k));
  auto elements = qubits == 1 ? local : tensor_power(local, qubits);

  // A group fixes one of {HV, DA, LR} per qubit; its 2^n elements are the
  // products whose local indices fall in that pair.
  std::vector<MeasurementSet::Group> groups;
  int n_groups = 1;
  for (int q = 0; q < qubits; ++q) n_groups *= 3;
  for (int g = 0; g < n_groups; ++g) {
    std::array<int, kMaxSetQubits> pair{};
    int rest = g;
    for (int q = qubits - 1; q >= 0; --q) {
      pair[static_cast<std::size_t>(q)] = rest % 3;
      rest /= 3;
    }
    MeasurementSet::Group group;
    for (int bits = 0; bits < (1 << qubits); ++bits) {
      std::size_t index = 0;
      for (int q = 0; q < qubits; ++q) {
        const int local_index = 2 * pair[static_cast<std::size_t>(q)] + ((bits >> (qubits - 1 - q)) & 1);
        index = index * 6 + static_cast<std::size_t>(local_index);
      }
      group.push_back(index);
    }
    groups.push_back(std::move(group));
  }
  return MeasurementSet(SetKind::Pauli, std::move(elements), std::move(groups));
}

MeasurementSet build_stoke_set(int qubits) {
  require_set_qubits(qubits);
  const auto kets = polarization_kets();
  const std::vector<QObject> local = {to_operator(kets[0]), to_operator(kets[1]), to_operator(kets[2]),
                                      to_operator(kets[5])};
  auto elements = qubits == 1 ? local : tensor_power(local, qubits);
  return MeasurementSet(SetKind::Stoke, std::move(elements), {});
}

std::vector<std::vector<QObject>> mub_bases(int d) {
  switch (d) {
    case 2: {
      const auto k = polarization_kets();
      return {{k[0], k[1]}, {k[2], k[3]}, {k[4], k[5]}};
    }
    case 3:
    case 5:
    case 7:
      return mub_odd_prime(d);
    case 4:
      return mub_d4();
    default:
      raise(ErrorKind::UnsupportedDimension, "MUB sets exist here for d in {2,3,4,5,7}, got " + std::to_string(d));
  }
}

MeasurementSet build_mub_set(int d) {
  const auto bases = mub_bases(d);
  std::vector<QObject> elements;
  for (const auto& basis : bases) {
    for (const auto& v : basis) elements.push_back(to_operator(v));
  }
  return MeasurementSet(SetKind::MUB, std::move(elements),
                        bases_as_groups(bases.size(), static_cast<std::size_t>(d)));
}

QObject weyl_displacement(int d, int j, int k) {
  if (d < 1) raise(ErrorKind::InvalidParameter, "dimension must be >= 1");
  if (j < 0 || j >= d || k < 0 || k >= d) raise(ErrorKind::IndexOutOfRange, "Weyl indices must lie in [0, d)");
  const double pi = std::numbers::pi;
  const complex prefactor = std::polar(1.0, pi * j * k / d);
  Matrix m = Matrix::Zero(d, d);
  for (int col = 0; col < d; ++col) {
    m((k + col) % d, col) = prefactor * std::polar(1.0, 2.0 * pi * ((j * col) % d) / d);
  }
  return QObject(std::move(m));
}

QObject sic_fiducial(int d) {
  if (d < 2 || d > 8) raise(ErrorKind::UnsupportedDimension, "SIC fiducials are tabulated for d in [2, 8]");
  static std::once_flag checked;
  static std::array<bool, 9> ok{};
  std::call_once(checked, [] {
    for (int dim = 2; dim <= 8; ++dim) {
      ok[static_cast<std::size_t>(dim)] = sic_overlap_error(dim, raw_fiducial(dim)) <= kSicSelfTestTol;
    }
  });
  if (!ok[static_cast<std::size_t>(d)]) {
    raise(ErrorKind::InvalidParameter, "SIC fiducial self-test failed for d = " + std::to_string(d));
  }
  return raw_fiducial(d);
}

MeasurementSet build_sic_set(int d) {
  const QObject phi = sic_fiducial(d);
  std::vector<QObject> elements;
  MeasurementSet::Group all;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const QObject h = dot(weyl_displacement(d, j, k), phi);
      all.push_back(elements.size());
      elements.push_back((1.0 / d) * to_operator(h));
    }
  }
  return MeasurementSet(SetKind::SIC, std::move(elements), {std::move(all)});
}

MeasurementSet build_set(std::string_view name, int dim) {
  if (name == "pauli") return build_pauli_set(qubits_for_dim(dim));
  if (name == "stoke") return build_stoke_set(qubits_for_dim(dim));
  if (name == "mub") return build_mub_set(dim);
  if (name == "sic") return build_sic_set(dim);
  raise(ErrorKind::InvalidParameter, "unknown measurement set '" + std::string(name) + "'");
}

}  // namespace qmx
