#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hog/model.hpp"

namespace hog {

/// Closed-form balanced-growth-path quantities.
///
/// With denominator D = 1 - sigma*(2+gamma):
///   h_hat       = (gamma+sigma)(rho-1)/D    growth rate of h; equals s/l on the path
///   theta       = (1+gamma)(rho-1)/D        common growth rate of c, k, y
///   l_hat       = (1-sigma)(rho-1)/D        common growth rate of s, l, l-s
///   lambda1_hat = -sigma*theta
///   lambda2_hat = rho - 1
///   x           = (1-sigma)*theta - rho     discounted-payoff exponent (< 0 in regime)
///   mpk         = (rho + sigma*theta)/beta  stationary output per unit capital
///   effort_bgp  = 1 - h_hat
///   ies         = (1 - h_hat)/(gamma*h_hat) intertemporal elasticity of substitution of s
struct BgpRates {
  double h_hat = 0.0;
  double theta = 0.0;
  double l_hat = 0.0;
  double lambda1_hat = 0.0;
  double lambda2_hat = 0.0;
  double x = 0.0;
  double mpk = 0.0;
  double effort_bgp = 0.0;
  double ies = 0.0;
};

/// Structured parameter checks. Closed forms remain evaluable when only the
/// convergence flags fail; callers decide how to treat flagged output.
struct ParamValidation {
  bool basic_domain_ok = false;       // sigma>0, sigma!=1, gamma>0, rho in (0,1), beta in (0,1)
  bool denominator_ok = false;        // 1 - sigma*(2+gamma) != 0
  bool convergence_regime_ok = false; // sigma > 1 and rho < 1
  bool bgp_feasible = false;          // h_hat in (0,1), so s < l on the path
  double h_hat = 0.0;                 // NaN when the denominator degenerates

  bool all_ok() const {
    return basic_domain_ok && denominator_ok && convergence_regime_ok && bgp_feasible;
  }
};

ParamValidation validate_params(const Params& p);

/// All closed-form rates. Throws degenerate_error when 1 - sigma*(2+gamma) == 0.
BgpRates bgp_rates(const Params& p);

/// Residual of the balanced-growth composition
/// theta - (h_hat + 2*l_hat - l_hat); identically zero up to rounding.
double growth_composition_residual(const BgpRates& r);

/// Output growth from log-differentiating the production function,
/// beta*theta + (1-beta)*(h_hat + 2*l_hat - l_hat); equals theta.
double output_growth_rate(const Params& p, const BgpRates& r);

/// Elasticity of the marginal displeasure of distraction time,
/// gamma*s/(l-s). Requires 0 < s < l.
double marginal_utility_elasticity(const Params& p, double s, double l);

/// Intertemporal elasticity of substitution of distraction time,
///   [(1+gamma)(1-sigma) - rho(gamma+sigma)] / [gamma(gamma+sigma)(rho-1)],
/// which equals (1 - h_hat)/(gamma*h_hat). Throws degenerate_error at rho == 1.
double ies_distraction(const Params& p);

/// ies_distraction evaluated over a list of gamma values; returns
/// (gamma, ies) pairs in input order. Tends to 0 as gamma grows when
/// sigma > 1 and rho < 1.
std::vector<std::pair<double, double>> ies_limit_scan(const Params& p,
                                                      std::span<const double> gammas);

/// Exponent x of the discounted payoff integrand along the balanced path;
/// negative exactly when the utility integral converges.
double convergence_exponent(const Params& p);

/// Discounted utility of a balanced path started at (c0, l0, s0):
/// (A1 - A2)*(-1/x) with A1 = c0^(1-sigma)/(1-sigma) and
/// A2 = (l0-s0)^(1+gamma)/(1+gamma). Throws divergence_error when x >= 0.
double utility_closed_form(const Params& p, double c0, double l0, double s0);

}  // namespace hog
