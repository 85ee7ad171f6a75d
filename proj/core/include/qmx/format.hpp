#pragma once

#include <optional>
#include <string>

namespace qmx {

/// 17 significant digits, enough to round-trip any double.
std::string format_real(double value);
/// Empty string for nullopt.
std::string format_real(const std::optional<double>& value);

}  // namespace qmx
