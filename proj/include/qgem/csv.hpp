#pragma once

#include <cstdio>
#include <string>

namespace qgem::csv {

/// Shortest exact decimal form of a double (round-trips bit-exactly), so
/// identical runs produce byte-identical CSV files.
inline std::string field(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = 0.0;
  for (int prec = 15; prec <= 16; ++prec) {
    char trial[40];
    std::snprintf(trial, sizeof(trial), "%.*g", prec, v);
    std::sscanf(trial, "%lf", &back);
    if (back == v) return trial;
  }
  return buf;
}

}  // namespace qgem::csv
