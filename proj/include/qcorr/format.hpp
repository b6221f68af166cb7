#pragma once

#include <cstdio>
#include <string>

namespace qcorr {

// 17 significant digits: enough for a lossless IEEE double round-trip.
// Machine-facing outputs (reports, CSV) use this.
inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// 6 significant digits for human-facing summaries.
inline std::string format_human(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace qcorr
