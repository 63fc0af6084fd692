#pragma once

#include <cstdio>
#include <string>

namespace whlab {

/// Round-trip decimal form, used for CSV payloads.
inline std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Human-readable form, used in text reports.
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

} // namespace whlab
