#pragma once

#include <array>
#include <string>

#include "hog/model.hpp"

namespace hog {

struct SweepAxis {
  bool active = false;
  double start = 0.0;
  double stop = 0.0;
  long count = 0;

  double value(long i) const {
    if (count <= 1) return start;
    return start + (stop - start) * static_cast<double>(i) /
                       static_cast<double>(count - 1);
  }
};

/// Axes are stored in the fixed order sigma, gamma, rho, beta.
inline constexpr std::array<const char*, 4> kSweepParamNames = {"sigma", "gamma",
                                                                "rho", "beta"};

/// Run configuration parsed from line-oriented `key = value` text.
///
/// Keys: sigma, gamma, rho, beta (required); h0, t_end, tol, records,
/// out_prefix, sweep.<param>.{start,stop,count} (optional). `#` starts a
/// comment; blank lines are ignored; unknown keys are rejected.
struct RunConfig {
  Params params;
  double h0 = 1.0;
  double t_end = 20.0;
  double tol = 1e-9;
  long records = 200;
  std::array<SweepAxis, 4> sweep{};
  std::string out_prefix;

  bool has_sweep() const {
    for (const auto& a : sweep)
      if (a.active) return true;
    return false;
  }
};

/// Throws config_error with the offending line or key.
RunConfig parse_config(const std::string& text);

/// Reads the file and parses it; an unreadable path is a config_error.
RunConfig load_config_file(const std::string& path);

}  // namespace hog
