#pragma once

#include <cstdio>
#include <string>

namespace opa {

// Every exported float carries 12 significant digits.
inline std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Rounded to 12 significant digits, so a shortest-round-trip printer (JSON)
// emits no more than that.
inline double sig12(double v) { return std::stod(fmt12(v)); }

}  // namespace opa
