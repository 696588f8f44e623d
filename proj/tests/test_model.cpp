#include <array>
#include <cmath>

#include "doctest.h"
#include "hog/errors.hpp"
#include "hog/foc.hpp"
#include "hog/model.hpp"
#include "support.hpp"

using namespace hog;
using testsupport::kSetA;
using testsupport::random_valid_point;

TEST_CASE("utility matches hand-evaluated points") {
  const Params p{2.0, 1.0, 0.5, 0.5};
  CHECK(std::abs(utility(p, {1.0, 1.0, 1.0}) - (-1.0)) < 1e-15);  // zero effective labor
  CHECK(std::abs(utility(p, {1.0, 0.0, 1.0}) - (-1.5)) < 1e-15);
  CHECK(std::abs(utility(p, {2.0, 1.0, 1.0}) - (-0.5)) < 1e-15);
}

TEST_CASE("utility rejects out-of-domain controls") {
  const Params p{2.0, 1.0, 0.5, 0.5};
  CHECK_THROWS_AS(utility(p, {0.0, 0.0, 1.0}), domain_error);
  CHECK_THROWS_AS(utility(p, {-1.0, 0.0, 1.0}), domain_error);
  CHECK_THROWS_AS(utility(p, {1.0, 1.5, 1.0}), domain_error);  // s > l
  CHECK_THROWS_AS(utility(p, {1.0, -0.1, 1.0}), domain_error);
  const Params unit_sigma{1.0, 1.0, 0.5, 0.5};
  CHECK_THROWS_AS(utility(unit_sigma, {1.0, 0.0, 1.0}), domain_error);
}

TEST_CASE("production matches hand-evaluated points") {
  const Params p{2.0, 1.0, 0.5, 0.5};
  CHECK(std::abs(production(p, {1.0, 1.0}, {1.0, 0.0, 1.0}) - 1.0) < 1e-15);
  CHECK(std::abs(production(p, {1.0, 1.0}, {1.0, 0.5, 1.0}) - 0.5) < 1e-15);
  CHECK(std::abs(production(p, {4.0, 1.0}, {1.0, 0.0, 1.0}) - 2.0) < 1e-15);
}

TEST_CASE("production rejects nonpositive inputs") {
  const Params p{2.0, 1.0, 0.5, 0.5};
  CHECK_THROWS_AS(production(p, {0.0, 1.0}, {1.0, 0.0, 1.0}), domain_error);
  CHECK_THROWS_AS(production(p, {1.0, -1.0}, {1.0, 0.0, 1.0}), domain_error);
  CHECK_THROWS_AS(production(p, {1.0, 1.0}, {1.0, 1.0, 1.0}), domain_error);  // l - s == 0
  CHECK_THROWS_AS(production(p, {1.0, 1.0}, {1.0, 0.0, 0.0}), domain_error);
}

TEST_CASE("production is homogeneous of degree one in (k, h)") {
  hog::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    auto pt = random_valid_point(rng);
    const Params p{rng.uniform(1.2, 4.0), rng.uniform(0.3, 3.0), 0.5,
                   rng.uniform(0.1, 0.9)};
    const double y1 = production(p, pt.xs.state, pt.ctr);
    const CapitalState doubled{2.0 * pt.xs.state.k, 2.0 * pt.xs.state.h};
    const double y2 = production(p, doubled, pt.ctr);
    CHECK(testsupport::rel_diff(y2, 2.0 * y1) < 1e-14);
  }
}

TEST_CASE("effort evaluates and errors per its domain") {
  CHECK(effort(0.0, 1.0) == 1.0);
  CHECK(effort(1.0, 1.0) == 0.0);
  CHECK(effort(0.25, 1.0) == 0.75);
  CHECK_THROWS_AS(effort(1.5, 1.0), domain_error);
  CHECK_THROWS_AS(effort(0.5, 0.0), domain_error);
  CHECK_THROWS_AS(effort(-0.1, 1.0), domain_error);
}

TEST_CASE("effort and the distraction share sum to one") {
  for (double s : {0.0, 0.25, 0.5, 0.75})
    CHECK(effort(s, 1.0) + s / 1.0 == 1.0);  // dyadic shares are exact
  hog::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const double l = rng.log_uniform(0.3, 4.0);
    const double s = rng.uniform(0.0, 1.0) * l;
    CHECK(std::abs(effort(s, l) + s / l - 1.0) <= 3e-16);
  }
}

TEST_CASE("hamiltonian with zero costates reduces to the payoff") {
  const Params p{2.0, 1.0, 0.5, 0.3};
  const ExtendedState xs{0.0, {1.3, 0.8}, {0.0, 0.0}};
  const Controls ctr{0.9, 0.2, 1.1};
  CHECK(hamiltonian(p, xs, ctr) == utility(p, ctr));
}

TEST_CASE("hamiltonian matches a hand-computed sum of terms") {
  const Params p{2.0, 1.0, 0.5, 0.5};
  const ExtendedState xs{0.0, {1.0, 1.0}, {1.0, 1.0}};
  const Controls ctr{1.0, 0.0, 1.0};
  // payoff -1.5, production surplus 1 - 1 = 0, accumulation value 0
  CHECK(std::abs(hamiltonian(p, xs, ctr) - (-1.5)) < 1e-15);
}

TEST_CASE("analytic partials agree with central finite differences") {
  hog::Rng rng(42);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    auto pt = random_valid_point(rng);
    const HamiltonianGradient g = hamiltonian_partials(kSetA, pt.xs, pt.ctr);
    const double analytic[5] = {g.dc, g.ds, g.dl, g.dk, g.dh};
    double* const vars[5] = {&pt.ctr.c, &pt.ctr.s, &pt.ctr.l, &pt.xs.state.k,
                             &pt.xs.state.h};
    for (int j = 0; j < 5; ++j) {
      const double v0 = *vars[j];
      const double dv = 1e-6 * v0;
      *vars[j] = v0 + dv;
      const double up = hamiltonian(kSetA, pt.xs, pt.ctr);
      *vars[j] = v0 - dv;
      const double dn = hamiltonian(kSetA, pt.xs, pt.ctr);
      *vars[j] = v0;
      const double fd = (up - dn) / (2.0 * dv);
      worst = std::max(worst, std::abs(analytic[j] - fd) /
                                  std::max({std::abs(analytic[j]), std::abs(fd), 1e-12}));
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("consumption partial vanishes exactly at c = lambda1^(-1/sigma)") {
  const Params p{2.0, 1.0, 0.5, 0.3};
  const ExtendedState xs{0.0, {1.4, 0.7}, {1.0, 2.0}};
  const Controls ctr{1.0, 0.3, 1.2};  // c = 1 = 1^( -1/2 )
  CHECK(hamiltonian_partials(p, xs, ctr).dc == 0.0);
}

TEST_CASE("ode right-hand sides match their defining laws") {
  const Params p{2.0, 1.0, 0.5, 0.5};
  SUBCASE("human capital accumulates at h*s/l") {
    const ExtendedState xs{0.0, {1.0, 1.0}, {1.0, 1.0}};
    const Controls ctr{1.0, 0.3, 1.0};
    CHECK(std::abs(ode_rhs(p, xs, ctr).dh - 0.3) < 1e-15);
  }
  SUBCASE("physical capital accumulates at y - c") {
    const ExtendedState xs{0.0, {1.0, 1.0}, {1.0, 1.0}};
    const Controls ctr{0.5, 0.0, 1.0};
    CHECK(std::abs(ode_rhs(p, xs, ctr).dk - 0.5) < 1e-15);
  }
  SUBCASE("lambda1 is stationary when the capital return equals rho") {
    // beta*k^(beta-1)*X^(1-beta) = 0.5 at the all-ones point with beta = 0.5
    const ExtendedState xs{0.0, {1.0, 1.0}, {1.0, 1.0}};
    const Controls ctr{1.0, 0.0, 1.0};
    CHECK(std::abs(ode_rhs(p, xs, ctr).dlambda1) < 1e-15);
  }
}

TEST_CASE("ode rates are consistent with the Hamiltonian partials") {
  hog::Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    auto pt = random_valid_point(rng);
    const auto g = hamiltonian_partials(kSetA, pt.xs, pt.ctr);
    const auto r = ode_rhs(kSetA, pt.xs, pt.ctr);
    const double d1 = kSetA.rho * pt.xs.costates.lambda1 - g.dk;
    const double d2 = kSetA.rho * pt.xs.costates.lambda2 - g.dh;
    CHECK(testsupport::rel_diff(r.dlambda1, d1) < 1e-12);
    CHECK(testsupport::rel_diff(r.dlambda2, d2) < 1e-12);
  }
}

TEST_CASE("perturbing consumption flips the first residual's sign as expected") {
  const Controls ctr = solve_controls(kSetA, 1.2, 0.9, 1.4, 0.9);
  const ExtendedState xs{0.0, {1.2, 0.9}, {1.4, 0.9}};
  Controls bumped = ctr;
  bumped.c *= 1.1;
  const auto res = foc_residuals(kSetA, xs, bumped);
  CHECK(res[0] < 0.0);  // c^( -sigma ) falls below lambda1
  bumped.c = ctr.c * 0.9;
  CHECK(foc_residuals(kSetA, xs, bumped)[0] > 0.0);
}

TEST_CASE("summed labor conditions factor through the labor-price identity") {
  hog::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    auto pt = random_valid_point(rng);
    const auto g = hamiltonian_partials(kSetA, pt.xs, pt.ctr);
    const double h = pt.xs.state.h;
    const double l = pt.ctr.l;
    const double s = pt.ctr.s;
    const double w = l - s;
    const double X = effective_input(pt.xs.state, pt.ctr);
    const double lam = (1.0 - kSetA.beta) * pt.xs.costates.lambda1 *
                       std::pow(pt.xs.state.k, kSetA.beta) * std::pow(X, -kSetA.beta);
    const double factored =
        h * (1.0 - s / l) * (pt.xs.costates.lambda2 / l - lam * (1.0 - s / l));
    const auto scales = foc_residual_scales(kSetA, pt.xs, pt.ctr);
    const double scale = scales[1] + scales[2];
    CHECK(std::abs((g.ds + g.dl) - factored) <= 1e-12 * scale);
    // vanishes exactly when the identity holds
    const double lhs = lam * w;
    if (testsupport::rel_diff(lhs, pt.xs.costates.lambda2) < 1e-13)
      CHECK(std::abs(g.ds + g.dl) <= 1e-12 * scale);
  }
}

TEST_CASE("normalized residual scales dominate each raw residual") {
  hog::Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    auto pt = random_valid_point(rng);
    const auto res = foc_residuals(kSetA, pt.xs, pt.ctr);
    const auto sc = foc_residual_scales(kSetA, pt.xs, pt.ctr);
    for (int j = 0; j < 3; ++j) {
      CHECK(sc[j] > 0.0);
      // each residual is a sum of terms no larger than ~3 scales
      CHECK(std::abs(res[j]) <= 3.0 * sc[j]);
    }
  }
}
