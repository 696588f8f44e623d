#pragma once

#include "hog/model.hpp"

namespace hog {

/// Controls solving the instantaneous first-order conditions at the given
/// state and costates.
///
/// The system collapses to closed form: c = lambda1^(-1/sigma); effective
/// labor w = l - s satisfies
///   w^(1 - beta*(2+gamma)) = lambda2^(1-beta) / ((1-beta)*lambda1*k^beta),
/// and l = lambda2*h/w^gamma, s = l - w.
///
/// Throws infeasible_error when the algebra yields s < 0 (no interior
/// solution with nonnegative distraction time), degenerate_error when
/// 1 - beta*(2+gamma) == 0, domain_error on nonpositive inputs.
Controls solve_controls(const Params& p, double k, double h, double lambda1,
                        double lambda2);

/// Search box and resolution for brute_force_controls. Lattice points with
/// s > max_distraction_share*l are skipped: the Hamiltonian rises again as
/// s -> l, and that corner regime is outside the interior stationary
/// solutions this solver targets.
struct GridSpec {
  double c_lo = 0.0, c_hi = 0.0;
  double s_lo = 0.0, s_hi = 0.0;
  double l_lo = 0.0, l_hi = 0.0;
  int points_per_dim = 13;
  int zoom_rounds = 26;
  double max_distraction_share = 0.75;
};

struct BruteForceResult {
  Controls controls;
  double value = 0.0;        // Hamiltonian at the returned point
  bool on_boundary = false;  // best point pinned to the box edge: no interior maximum
};

/// Direct Hamiltonian maximization over the box: a dense lattice followed
/// by repeated shrinking around the incumbent best point. Independent of
/// solve_controls; intended as its oracle.
BruteForceResult brute_force_controls(const Params& p, double k, double h,
                                      double lambda1, double lambda2,
                                      const GridSpec& grid);

}  // namespace hog
