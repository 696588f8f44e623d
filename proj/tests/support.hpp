#pragma once

#include <algorithm>
#include <cmath>

#include "hog/analytics.hpp"
#include "hog/model.hpp"
#include "hog/rng.hpp"
#include "hog/simulate.hpp"

namespace testsupport {

inline const hog::Params kSetA{2.0, 1.0, 0.5, 0.3};
inline const hog::Params kSetB{3.0, 2.0, 0.8, 0.3};

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// Independent route to the balanced-path labor scale: the labor-price
// residual is C1*l0^(1-sigma) - C2*l0^(1+gamma), so the root is
// (C1/C2)^(1/(gamma+sigma)). Used as the oracle for the bracketed solve.
inline double initial_labor_closed_form(const hog::Params& p, double h0) {
  const hog::BgpRates r = hog::bgp_rates(p);
  const double a = p.rho + p.sigma * r.theta;
  const double xt = h0 * (1.0 - r.h_hat) * (1.0 - r.h_hat);
  const double kt = xt * std::pow(p.beta / a, 1.0 / (1.0 - p.beta));
  const double ct = kt * (a / p.beta - r.theta);
  const double c1 = (1.0 - p.beta) * std::pow(ct, -p.sigma) * std::pow(kt, p.beta) *
                    std::pow(xt, -p.beta) * (1.0 - r.h_hat);
  const double c2 = std::pow(1.0 - r.h_hat, p.gamma) / h0;
  return std::pow(c1 / c2, 1.0 / (p.gamma + p.sigma));
}

// Parameters passing every validation flag.
inline hog::Params random_regime_params(hog::Rng& rng) {
  for (;;) {
    hog::Params p{rng.uniform(1.2, 4.0), rng.uniform(0.3, 3.0), rng.uniform(0.15, 0.9),
                  rng.uniform(0.1, 0.45)};
    if (hog::validate_params(p).all_ok()) return p;
  }
}

// A generic valid evaluation point (not necessarily solving the
// first-order conditions).
struct Point {
  hog::ExtendedState xs;
  hog::Controls ctr;
};

inline Point random_valid_point(hog::Rng& rng) {
  Point pt;
  pt.xs.state.k = rng.log_uniform(0.2, 5.0);
  pt.xs.state.h = rng.log_uniform(0.2, 5.0);
  pt.xs.costates.lambda1 = rng.log_uniform(0.2, 5.0);
  pt.xs.costates.lambda2 = rng.log_uniform(0.2, 5.0);
  pt.ctr.c = rng.log_uniform(0.2, 5.0);
  pt.ctr.l = rng.log_uniform(0.5, 3.0);
  pt.ctr.s = rng.uniform(0.05, 0.85) * pt.ctr.l;
  return pt;
}

}  // namespace testsupport
