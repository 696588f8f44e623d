#pragma once

#include <cstdio>
#include <string>

namespace hog {

// 17 significant digits: doubles survive a write/parse round trip bit-exactly.
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace hog
