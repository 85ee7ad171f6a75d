#include "qmx/error.hpp"

namespace qmx {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidObject: return "InvalidObject";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::NotQubitSystem: return "NotQubitSystem";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorKind::InvalidQuantumNumber: return "InvalidQuantumNumber";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::OutcomeImpossible: return "OutcomeImpossible";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::RankDeficientSet: return "RankDeficientSet";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qmx
