#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hog/analytics.hpp"
#include "hog/model.hpp"
#include "hog/rk45.hpp"

namespace hog {

/// One sampled point of an integrated trajectory, with derived diagnostics.
struct TrajectoryRecord {
  double t = 0.0;
  double k = 0.0, h = 0.0, lambda1 = 0.0, lambda2 = 0.0;
  double c = 0.0, s = 0.0, l = 0.0;
  double y = 0.0;       // output
  double effort = 0.0;  // 1 - s/l
  double mpk = 0.0;     // k^(beta-1) X^(1-beta)
  std::array<double, 3> residuals{};  // normalized first-order-condition residuals
  double tv1 = 0.0;     // k*lambda1*exp(-rho t)
  double tv2 = 0.0;     // h*lambda2*exp(-rho t)
};

using IntegratorStats = StepStats;

struct Trajectory {
  Params params;
  std::vector<TrajectoryRecord> records;  // strictly increasing t, first at x0.t
  IntegratorStats stats;
  bool aborted = false;  // partial result (only possible with allow_partial)
  double abort_time = 0.0;
  std::string abort_reason;
};

struct IntegrateOptions {
  double rel_tol = 1e-9;
  int records = 200;          // evenly spaced samples from x0.t to t_end inclusive
  bool allow_partial = false; // on mid-run failure return the records so far
};

/// Labor scale l0 for which the balanced-growth construction at h0
/// satisfies every first-order condition. Solved as a bracketed root-find
/// in log l0; the residual is strictly monotone there. Throws bracket_error
/// when the parameters are outside the balanced-growth regime.
double bgp_find_initial_labor(const Params& p, double h0);

/// Balanced-growth-consistent initial point at t = 0: state, costates, and
/// the controls they induce.
std::pair<ExtendedState, Controls> bgp_initial_state(const Params& p, double h0);

/// Integrate the optimality system from x0 to t_end, re-solving the
/// controls at every derivative evaluation. Integration runs on the logs of
/// (k, h, lambda1, lambda2), which keeps them positive and makes balanced
/// paths exactly linear.
Trajectory integrate(const Params& p, const ExtendedState& x0, double t_end,
                     const IntegrateOptions& opts = {});

/// Least-squares growth rates of the log series, after discarding the
/// initial burn-in fraction of the time span. Requires at least 10 records
/// after burn-in.
struct EmpiricalRates {
  double k = 0.0, h = 0.0, c = 0.0, s = 0.0, l = 0.0, lambda1 = 0.0, lambda2 = 0.0;
  std::array<double, 7> as_array() const { return {k, h, c, s, l, lambda1, lambda2}; }
};
EmpiricalRates estimate_growth_rates(const Trajectory& traj,
                                     double burn_in_fraction = 0.1);

/// Discounted utility of the trajectory: composite quadrature over the
/// records plus the analytic balanced-path tail evaluated from the last
/// record. Throws divergence_error when the tail exponent is nonnegative.
double discounted_utility(const Params& p, const Trajectory& traj);

struct CheckResult {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  double rel_tol = 1e-9;
  int records = 200;
  double burn_in_fraction = 0.1;
  double lambda2_scale = 1.0;  // negative-control knob: scales the initial costate
  double rate_tol = 1e-5;      // absolute, on log-slopes
  double drift_tol = 1e-7;     // relative constancy drift
  double residual_tol = 1e-8;  // normalized first-order-condition residuals
  double tv_slope_tol = 1e-6;  // transversality log-slopes vs x
  double utility_rel_tol = 1e-6;
  double identity_tol = 1e-12;
};

struct VerificationReport {
  BgpRates rates;             // closed forms
  EmpiricalRates empirical{}; // regression slopes (valid only if empirical_valid)
  bool empirical_valid = false;
  std::vector<CheckResult> checks;
  bool integration_aborted = false;
  double abort_time = 0.0;
  std::string abort_reason;

  bool all_pass() const;
};

/// Full pipeline: construct the balanced initial point, integrate, estimate
/// rates, and compare every closed-form claim at its tolerance.
VerificationReport verify_bgp(const Params& p, double h0, double t_end = 20.0,
                              const VerifyOptions& opts = {});

}  // namespace hog
