#pragma once

#include <array>

namespace hog {

/// Model primitives.
///
///   sigma  curvature of consumption utility (> 0, != 1)
///   gamma  curvature of the labor-displeasure term (> 0)
///   rho    discount rate (in (0,1))
///   beta   capital share in production (in (0,1))
struct Params {
  double sigma = 2.0;
  double gamma = 1.0;
  double rho = 0.5;
  double beta = 0.3;
};

/// Physical capital k and human capital h, both strictly positive.
struct CapitalState {
  double k = 1.0;
  double h = 1.0;
};

/// Shadow prices of the two capital stocks.
struct Costates {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
};

/// Planner controls: consumption rate c, time s spent on distracting
/// activities, labor supply l. Feasibility requires c > 0 and 0 <= s < l.
struct Controls {
  double c = 1.0;
  double s = 0.0;
  double l = 1.0;
};

/// Full ODE state: time plus capitals and costates.
struct ExtendedState {
  double t = 0.0;
  CapitalState state;
  Costates costates;
};

/// Partials of the current-value Hamiltonian in (c, s, l, k, h).
struct HamiltonianGradient {
  double dc = 0.0;
  double ds = 0.0;
  double dl = 0.0;
  double dk = 0.0;
  double dh = 0.0;
};

/// Right-hand sides of the four evolution equations.
struct StateRates {
  double dk = 0.0;
  double dh = 0.0;
  double dlambda1 = 0.0;
  double dlambda2 = 0.0;
};

/// Instantaneous payoff c^(1-sigma)/(1-sigma) - (l-s)^(1+gamma)/(1+gamma).
/// s == l is allowed (the displeasure term vanishes); s > l is not.
double utility(const Params& p, const Controls& ctr);

/// Effective input X = (h/l)(l-s)^2 entering production.
double effective_input(const CapitalState& st, const Controls& ctr);

/// Output y = k^beta * X^(1-beta). Requires k, h, l, l-s > 0.
double production(const Params& p, const CapitalState& st, const Controls& ctr);

/// Worker effort 1 - s/l, in [0,1]. The share s/l of effort feeds human
/// capital accumulation instead.
double effort(double s, double l);

/// Output per unit of physical capital, k^(beta-1) * X^(1-beta).
/// Constant along a balanced growth path at (rho + sigma*theta)/beta.
double mpk(const Params& p, const CapitalState& st, const Controls& ctr);

/// Current-value Hamiltonian V + lambda1*(y - c) + lambda2*h*s/l.
double hamiltonian(const Params& p, const ExtendedState& xs, const Controls& ctr);

/// Analytic partials of the Hamiltonian.
HamiltonianGradient hamiltonian_partials(const Params& p, const ExtendedState& xs,
                                         const Controls& ctr);

/// Evolution of (k, h, lambda1, lambda2):
///   dk = y - c
///   dh = h*s/l
///   dlambda1 = lambda1*(rho - beta*k^(beta-1)*X^(1-beta))
///   dlambda2 = rho*lambda2 - H_h
StateRates ode_rhs(const Params& p, const ExtendedState& xs, const Controls& ctr);

/// First-order-condition residuals (H_c, H_s, H_l); all zero at controls
/// that solve the instantaneous optimality conditions.
std::array<double, 3> foc_residuals(const Params& p, const ExtendedState& xs,
                                    const Controls& ctr);

/// Magnitude of the largest additive term in each first-order condition.
/// Dividing a residual by its scale gives a dimensionless measure that is
/// robust to the overall size of the state.
std::array<double, 3> foc_residual_scales(const Params& p, const ExtendedState& xs,
                                          const Controls& ctr);

}  // namespace hog
