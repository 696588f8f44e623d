#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hog/config.hpp"
#include "hog/simulate.hpp"

namespace hog::cli {

struct RatesOptions {
  bool csv = false;
  bool strict = false;
};

struct SimulateOptions {
  double lambda2_scale = 1.0;
};

struct VerifyCommandOptions {
  double lambda2_scale = 1.0;
};

struct GradcheckOptions {
  std::uint64_t seed = 42;
  double step = 1e-6;  // relative finite-difference step
  int points = 100;
};

// Commands return process exit codes:
//   0 success / all checks pass
//   1 verification failure
//   2 configuration error (also raised as config_error)
//   3 runtime or solver error (raised as hog::error)
int cmd_rates(const RunConfig& cfg, const RatesOptions& opts, std::ostream& out);
int cmd_simulate(const RunConfig& cfg, const SimulateOptions& opts, std::ostream& log);
int cmd_verify(const RunConfig& cfg, const VerifyCommandOptions& opts, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& log);
int cmd_gradcheck(const RunConfig& cfg, const GradcheckOptions& opts, std::ostream& out);

// Building blocks behind the commands, exercised directly in tests.
std::string rates_csv(const Params& p);
std::string sweep_csv(const RunConfig& cfg);
void write_trajectory_csv(const Trajectory& traj, std::ostream& os);
void print_verification_report(const VerificationReport& rep, std::ostream& os);

}  // namespace hog::cli
