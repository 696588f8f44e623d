#include "hog/analytics.hpp"

#include <cmath>
#include <limits>

#include "hog/errors.hpp"

namespace hog {

namespace {

double denominator(const Params& p) { return 1.0 - p.sigma * (2.0 + p.gamma); }

}  // namespace

ParamValidation validate_params(const Params& p) {
  ParamValidation v;
  v.basic_domain_ok = p.sigma > 0.0 && p.sigma != 1.0 && p.gamma > 0.0 &&
                      p.rho > 0.0 && p.rho < 1.0 && p.beta > 0.0 && p.beta < 1.0;
  const double den = denominator(p);
  v.denominator_ok = den != 0.0;
  v.convergence_regime_ok = p.sigma > 1.0 && p.rho < 1.0;
  if (v.denominator_ok) {
    v.h_hat = (p.gamma + p.sigma) * (p.rho - 1.0) / den;
    v.bgp_feasible = v.h_hat > 0.0 && v.h_hat < 1.0;
  } else {
    v.h_hat = std::numeric_limits<double>::quiet_NaN();
    v.bgp_feasible = false;
  }
  return v;
}

BgpRates bgp_rates(const Params& p) {
  const double den = denominator(p);
  if (den == 0.0)
    throw degenerate_error("bgp_rates: degenerate denominator 1 - sigma*(2+gamma) == 0");
  BgpRates r;
  r.h_hat = (p.gamma + p.sigma) * (p.rho - 1.0) / den;
  r.theta = (1.0 + p.gamma) * (p.rho - 1.0) / den;
  r.l_hat = (1.0 - p.sigma) * (p.rho - 1.0) / den;
  r.lambda1_hat = -p.sigma * r.theta;
  r.lambda2_hat = p.rho - 1.0;
  r.x = (1.0 - p.sigma) * r.theta - p.rho;
  r.mpk = (p.rho + p.sigma * r.theta) / p.beta;
  r.effort_bgp = 1.0 - r.h_hat;
  r.ies = (1.0 - r.h_hat) / (p.gamma * r.h_hat);
  return r;
}

double growth_composition_residual(const BgpRates& r) {
  // s, l, and l-s share the growth rate l_hat on the balanced path
  return r.theta - (r.h_hat + 2.0 * r.l_hat - r.l_hat);
}

double output_growth_rate(const Params& p, const BgpRates& r) {
  return p.beta * r.theta + (1.0 - p.beta) * (r.h_hat + 2.0 * r.l_hat - r.l_hat);
}

double marginal_utility_elasticity(const Params& p, double s, double l) {
  if (!(s > 0.0)) throw domain_error("marginal_utility_elasticity: need s > 0");
  if (!(s < l)) throw domain_error("marginal_utility_elasticity: need s < l");
  return p.gamma * s / (l - s);
}

double ies_distraction(const Params& p) {
  if (p.rho == 1.0)
    throw degenerate_error("ies_distraction: rho == 1 degenerates the balanced path");
  const double num = (1.0 + p.gamma) * (1.0 - p.sigma) - p.rho * (p.gamma + p.sigma);
  const double den = p.gamma * (p.gamma + p.sigma) * (p.rho - 1.0);
  return num / den;
}

std::vector<std::pair<double, double>> ies_limit_scan(const Params& p,
                                                      std::span<const double> gammas) {
  std::vector<std::pair<double, double>> out;
  out.reserve(gammas.size());
  for (double g : gammas) {
    Params q = p;
    q.gamma = g;
    out.emplace_back(g, ies_distraction(q));
  }
  return out;
}

double convergence_exponent(const Params& p) {
  const double den = denominator(p);
  if (den == 0.0)
    throw degenerate_error(
        "convergence_exponent: degenerate denominator 1 - sigma*(2+gamma) == 0");
  return (1.0 + p.gamma) * (1.0 - p.sigma) * (p.rho - 1.0) / den - p.rho;
}

double utility_closed_form(const Params& p, double c0, double l0, double s0) {
  if (!(c0 > 0.0)) throw domain_error("utility_closed_form: need c0 > 0");
  if (s0 < 0.0 || !(s0 < l0))
    throw domain_error("utility_closed_form: need 0 <= s0 < l0");
  const double x = convergence_exponent(p);
  if (x >= 0.0)
    throw divergence_error("utility_closed_form: integral diverges (x >= 0)");
  const double a1 = std::pow(c0, 1.0 - p.sigma) / (1.0 - p.sigma);
  const double a2 = std::pow(l0 - s0, 1.0 + p.gamma) / (1.0 + p.gamma);
  return (a1 - a2) * (-1.0 / x);
}

}  // namespace hog
