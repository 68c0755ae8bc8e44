#pragma once

#include <cstdio>
#include <string>

namespace fourier_l1 {

/// Round-trippable scientific notation used by every CSV writer.
inline std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17e", value);
  return buf;
}

}  // namespace fourier_l1
