#include "qmx/format.hpp"

#include <cstdio>

namespace qmx {

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string format_real(const std::optional<double>& value) {
  return value ? format_real(*value) : std::string();
}

}  // namespace qmx
