#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmx {

enum class ErrorKind {
  InvalidObject,
  DimensionMismatch,
  NotHermitian,
  NotPositive,
  ZeroNorm,
  NotQubitSystem,
  IndexOutOfRange,
  NotDiagonalizable,
  InvalidQuantumNumber,
  InvalidParameter,
  OutcomeImpossible,
  UnsupportedDimension,
  InvalidDistribution,
  RankDeficientSet,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// that front ends (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace qmx
