#include "hog/model.hpp"

#include <algorithm>
#include <cmath>

#include "hog/errors.hpp"

namespace hog {

namespace {

// strict_labor: require l - s > 0 (production-side functions); otherwise
// l - s >= 0 is enough (payoff is defined at zero effective labor).
void check_controls(const Controls& ctr, bool strict_labor) {
  if (!(ctr.c > 0.0)) throw domain_error("controls: consumption must be positive");
  if (!(ctr.l > 0.0)) throw domain_error("controls: labor supply must be positive");
  if (ctr.s < 0.0) throw domain_error("controls: distraction time must be nonnegative");
  const double w = ctr.l - ctr.s;
  if (strict_labor ? !(w > 0.0) : w < 0.0)
    throw domain_error("controls: effective labor l - s out of domain");
}

void check_state(const CapitalState& st) {
  if (!(st.k > 0.0) || !(st.h > 0.0))
    throw domain_error("state: capital stocks must be positive");
}

}  // namespace

double utility(const Params& p, const Controls& ctr) {
  if (p.sigma == 1.0) throw domain_error("utility: sigma == 1 is outside the model domain");
  check_controls(ctr, /*strict_labor=*/false);
  const double w = ctr.l - ctr.s;
  return std::pow(ctr.c, 1.0 - p.sigma) / (1.0 - p.sigma) -
         std::pow(w, 1.0 + p.gamma) / (1.0 + p.gamma);
}

double effective_input(const CapitalState& st, const Controls& ctr) {
  const double w = ctr.l - ctr.s;
  return st.h / ctr.l * w * w;
}

double production(const Params& p, const CapitalState& st, const Controls& ctr) {
  check_state(st);
  check_controls(ctr, /*strict_labor=*/true);
  return std::pow(st.k, p.beta) * std::pow(effective_input(st, ctr), 1.0 - p.beta);
}

double effort(double s, double l) {
  if (!(l > 0.0)) throw domain_error("effort: labor supply must be positive");
  if (s < 0.0 || s > l) throw domain_error("effort: need 0 <= s <= l");
  return 1.0 - s / l;
}

double mpk(const Params& p, const CapitalState& st, const Controls& ctr) {
  check_state(st);
  check_controls(ctr, /*strict_labor=*/true);
  return std::pow(st.k, p.beta - 1.0) * std::pow(effective_input(st, ctr), 1.0 - p.beta);
}

double hamiltonian(const Params& p, const ExtendedState& xs, const Controls& ctr) {
  const double y = production(p, xs.state, ctr);
  return utility(p, ctr) + xs.costates.lambda1 * (y - ctr.c) +
         xs.costates.lambda2 * xs.state.h * ctr.s / ctr.l;
}

HamiltonianGradient hamiltonian_partials(const Params& p, const ExtendedState& xs,
                                         const Controls& ctr) {
  check_state(xs.state);
  check_controls(ctr, /*strict_labor=*/true);
  const double k = xs.state.k;
  const double h = xs.state.h;
  const double l1 = xs.costates.lambda1;
  const double l2 = xs.costates.lambda2;
  const double s = ctr.s;
  const double l = ctr.l;
  const double w = l - s;
  const double X = h / l * w * w;
  const double lam = (1.0 - p.beta) * l1 * std::pow(k, p.beta) * std::pow(X, -p.beta);

  HamiltonianGradient g;
  g.dc = std::pow(ctr.c, -p.sigma) - l1;
  g.ds = std::pow(w, p.gamma) + lam * h * (-2.0 + 2.0 * s / l) + l2 * h / l;
  g.dl = -std::pow(w, p.gamma) + lam * h * (1.0 - s * s / (l * l)) - l2 * h * s / (l * l);
  g.dk = l1 * p.beta * std::pow(k, p.beta - 1.0) * std::pow(X, 1.0 - p.beta);
  g.dh = lam * w * w / l + l2 * s / l;
  return g;
}

StateRates ode_rhs(const Params& p, const ExtendedState& xs, const Controls& ctr) {
  const double y = production(p, xs.state, ctr);
  const double h = xs.state.h;
  const double l1 = xs.costates.lambda1;
  const double l2 = xs.costates.lambda2;
  const double w = ctr.l - ctr.s;
  const double X = effective_input(xs.state, ctr);
  const double lam =
      (1.0 - p.beta) * l1 * std::pow(xs.state.k, p.beta) * std::pow(X, -p.beta);

  StateRates r;
  r.dk = y - ctr.c;
  r.dh = h * ctr.s / ctr.l;
  r.dlambda1 = l1 * (p.rho - p.beta * std::pow(xs.state.k, p.beta - 1.0) *
                                 std::pow(X, 1.0 - p.beta));
  r.dlambda2 = p.rho * l2 - lam * w * w / ctr.l - l2 * ctr.s / ctr.l;
  return r;
}

std::array<double, 3> foc_residuals(const Params& p, const ExtendedState& xs,
                                    const Controls& ctr) {
  const HamiltonianGradient g = hamiltonian_partials(p, xs, ctr);
  return {g.dc, g.ds, g.dl};
}

std::array<double, 3> foc_residual_scales(const Params& p, const ExtendedState& xs,
                                          const Controls& ctr) {
  check_state(xs.state);
  check_controls(ctr, /*strict_labor=*/true);
  const double h = xs.state.h;
  const double l1 = xs.costates.lambda1;
  const double l2 = xs.costates.lambda2;
  const double s = ctr.s;
  const double l = ctr.l;
  const double w = l - s;
  const double X = h / l * w * w;
  const double lam = std::abs((1.0 - p.beta) * l1 * std::pow(xs.state.k, p.beta) *
                              std::pow(X, -p.beta));
  const double wg = std::pow(w, p.gamma);
  constexpr double floor = 1e-300;

  const double s1 = std::max({std::pow(ctr.c, -p.sigma), std::abs(l1), floor});
  const double s2 = std::max(
      {wg, lam * h * 2.0 * w / l, std::abs(l2) * h / l, floor});
  const double s3 = std::max(
      {wg, lam * h * (1.0 - s * s / (l * l)), std::abs(l2) * h * s / (l * l), floor});
  return {s1, s2, s3};
}

}  // namespace hog
