#include <cmath>
#include <vector>

#include "doctest.h"
#include "hog/errors.hpp"
#include "hog/foc.hpp"
#include "hog/simulate.hpp"
#include "support.hpp"

using namespace hog;
using testsupport::initial_labor_closed_form;
using testsupport::kSetA;
using testsupport::kSetB;
using testsupport::rel_diff;

namespace {

// Synthetic exactly-exponential trajectory for regression tests.
Trajectory synthetic_exponential(int n, double dt, const std::array<double, 7>& slopes) {
  Trajectory traj;
  traj.params = kSetA;
  for (int i = 0; i < n; ++i) {
    TrajectoryRecord r;
    r.t = i * dt;
    r.k = std::exp(0.11 + slopes[0] * r.t);
    r.h = std::exp(-0.4 + slopes[1] * r.t);
    r.c = std::exp(0.02 + slopes[2] * r.t);
    r.s = std::exp(-1.0 + slopes[3] * r.t);
    r.l = std::exp(-0.7 + slopes[4] * r.t);
    r.lambda1 = std::exp(0.9 + slopes[5] * r.t);
    r.lambda2 = std::exp(0.5 + slopes[6] * r.t);
    traj.records.push_back(r);
  }
  return traj;
}

}  // namespace

TEST_CASE("initial labor scale: root-find against the closed-form route") {
  for (double h0 : {1.0, 0.5, 2.0}) {
    const double found = bgp_find_initial_labor(kSetA, h0);
    CHECK(rel_diff(found, initial_labor_closed_form(kSetA, h0)) < 1e-10);
  }
  const double l0 = bgp_find_initial_labor(kSetA, 1.0);
  CHECK(l0 > 1.7);
  CHECK(l0 < 1.8);
  CHECK(rel_diff(bgp_find_initial_labor(kSetB, 1.0),
                 initial_labor_closed_form(kSetB, 1.0)) < 1e-10);
}

TEST_CASE("initial labor scale follows a power law in h0") {
  const double l1 = bgp_find_initial_labor(kSetA, 1.0);
  const double l2 = bgp_find_initial_labor(kSetA, 2.0);
  const double expo = (1.0 - kSetA.sigma) / (kSetA.gamma + kSetA.sigma);
  CHECK(rel_diff(l2 / l1, std::pow(2.0, expo)) < 1e-9);
}

TEST_CASE("initial labor scale rejects parameters outside the regime") {
  CHECK_THROWS_AS(bgp_find_initial_labor({0.5, 1.0, 0.5, 0.3}, 1.0), bracket_error);
  CHECK_THROWS_AS(bgp_find_initial_labor(kSetA, -1.0), domain_error);
}

TEST_CASE("balanced initial state satisfies its construction targets") {
  SUBCASE("first reference set") {
    auto [xs, ctr] = bgp_initial_state(kSetA, 1.0);
    CHECK(std::abs(ctr.s / ctr.l - 0.3) <= 1e-12);
    CHECK(std::abs(mpk(kSetA, xs.state, ctr) - 3.0) <= 1e-12);
    CHECK(std::abs(ctr.c / xs.state.k - 2.8) <= 1e-12);
    CHECK(std::isfinite(hamiltonian(kSetA, xs, ctr)));
    const auto res = foc_residuals(kSetA, xs, ctr);
    const auto sc = foc_residual_scales(kSetA, xs, ctr);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(res[i]) / sc[i] < 1e-10);
    const Controls sol = solve_controls(kSetA, xs.state.k, xs.state.h,
                                        xs.costates.lambda1, xs.costates.lambda2);
    CHECK(rel_diff(sol.c, ctr.c) < 1e-8);
    CHECK(rel_diff(sol.s, ctr.s) < 1e-8);
    CHECK(rel_diff(sol.l, ctr.l) < 1e-8);
  }
  SUBCASE("second reference set") {
    auto [xs, ctr] = bgp_initial_state(kSetB, 1.0);
    (void)xs;
    CHECK(std::abs(ctr.s / ctr.l - 1.0 / 11.0) <= 1e-12);
  }
}

TEST_CASE("integration stays on the balanced path") {
  auto [x0, ctr0] = bgp_initial_state(kSetA, 1.0);
  (void)ctr0;
  const Trajectory traj = integrate(kSetA, x0, 20.0);
  REQUIRE(traj.records.size() == 200);
  CHECK(!traj.aborted);
  CHECK(traj.records.front().t == 0.0);
  CHECK(traj.records.back().t == 20.0);
  for (std::size_t i = 1; i < traj.records.size(); ++i)
    CHECK(traj.records[i].t > traj.records[i - 1].t);

  const double sl0 = traj.records.front().s / traj.records.front().l;
  double max_res = 0.0, sl_drift = 0.0;
  for (const auto& r : traj.records) {
    for (double v : r.residuals) max_res = std::max(max_res, std::abs(v));
    sl_drift = std::max(sl_drift, std::abs(r.s / r.l - sl0) / sl0);
  }
  CHECK(max_res < 1e-8);
  CHECK(sl_drift < 1e-7);
}

TEST_CASE("a zero-length horizon returns the initial point only") {
  auto [x0, ctr0] = bgp_initial_state(kSetA, 1.0);
  const Trajectory traj = integrate(kSetA, x0, 0.0);
  REQUIRE(traj.records.size() == 1);
  const auto& r = traj.records.front();
  CHECK(r.t == 0.0);
  CHECK(rel_diff(r.k, x0.state.k) < 1e-14);
  CHECK(rel_diff(r.h, x0.state.h) < 1e-14);
  CHECK(rel_diff(r.lambda1, x0.costates.lambda1) < 1e-14);
  CHECK(rel_diff(r.lambda2, x0.costates.lambda2) < 1e-14);
  CHECK(rel_diff(r.c, ctr0.c) < 1e-8);
}

TEST_CASE("growth-rate regression is exact on synthetic exponentials") {
  const std::array<double, 7> slopes = {0.17, -0.05, 0.21, 0.08, -0.13, -0.4, 0.02};
  const auto traj = synthetic_exponential(101, 0.2, slopes);
  const EmpiricalRates e = estimate_growth_rates(traj, 0.1);
  const auto got = e.as_array();
  for (int i = 0; i < 7; ++i) CHECK(std::abs(got[i] - slopes[i]) < 1e-13);
}

TEST_CASE("growth-rate regression returns zero slopes on constant series") {
  const std::array<double, 7> zeros{};
  const auto traj = synthetic_exponential(50, 0.5, zeros);
  const auto got = estimate_growth_rates(traj, 0.1).as_array();
  for (int i = 0; i < 7; ++i) CHECK(std::abs(got[i]) < 1e-15);
}

TEST_CASE("growth-rate regression needs enough post-burn-in records") {
  const std::array<double, 7> slopes{};
  const auto traj = synthetic_exponential(9, 0.5, slopes);
  CHECK_THROWS_AS(estimate_growth_rates(traj, 0.1), insufficient_data_error);
  CHECK_THROWS_AS(estimate_growth_rates(traj, -0.1), domain_error);
}

TEST_CASE("balanced trajectory reproduces every closed-form rate") {
  auto [x0, ctr0] = bgp_initial_state(kSetA, 1.0);
  (void)ctr0;
  const Trajectory traj = integrate(kSetA, x0, 20.0);
  const EmpiricalRates e = estimate_growth_rates(traj, 0.1);
  CHECK(std::abs(e.k - 0.2) < 1e-7);
  CHECK(std::abs(e.h - 0.3) < 1e-7);
  CHECK(std::abs(e.c - 0.2) < 1e-7);
  CHECK(std::abs(e.s - (-0.1)) < 1e-7);
  CHECK(std::abs(e.l - (-0.1)) < 1e-7);
  CHECK(std::abs(e.lambda1 - (-0.4)) < 1e-7);
  CHECK(std::abs(e.lambda2 - (-0.5)) < 1e-7);
}

TEST_CASE("tightening the integrator tolerance leaves the rates unchanged") {
  auto [x0, ctr0] = bgp_initial_state(kSetA, 1.0);
  (void)ctr0;
  IntegrateOptions coarse, fine;
  coarse.rel_tol = 1e-9;
  fine.rel_tol = 1e-10;
  const auto ec = estimate_growth_rates(integrate(kSetA, x0, 20.0, coarse), 0.1);
  const auto ef = estimate_growth_rates(integrate(kSetA, x0, 20.0, fine), 0.1);
  const auto a = ec.as_array(), b = ef.as_array();
  for (int i = 0; i < 7; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-7);
}

TEST_CASE("discounted utility matches the closed form on the balanced path") {
  auto [x0, ctr0] = bgp_initial_state(kSetA, 1.0);
  const double closed = utility_closed_form(kSetA, ctr0.c, ctr0.l, ctr0.s);
  const Trajectory t20 = integrate(kSetA, x0, 20.0);
  CHECK(rel_diff(discounted_utility(kSetA, t20), closed) < 1e-6);
  // the analytic tail compensates when the horizon is halved
  const Trajectory t10 = integrate(kSetA, x0, 10.0);
  CHECK(rel_diff(discounted_utility(kSetA, t10), closed) < 1e-6);
  // a single-record trajectory is pure tail and already matches
  const Trajectory t0 = integrate(kSetA, x0, 0.0);
  CHECK(rel_diff(discounted_utility(kSetA, t0), closed) < 1e-8);
}

TEST_CASE("discounted utility is zero when the two payoff terms cancel") {
  const Params p{0.5, 1.0, 0.9, 0.3};  // x = -0.7
  Trajectory traj;
  traj.params = p;
  for (int i = 0; i <= 40; ++i) {
    TrajectoryRecord r;
    r.t = 0.05 * i;
    r.k = r.h = r.lambda1 = r.lambda2 = 1.0;
    r.c = 0.00390625;  // payoff terms both equal 0.125 exactly
    r.s = 0.5;
    r.l = 1.0;
    traj.records.push_back(r);
  }
  CHECK(discounted_utility(p, traj) == 0.0);
}

TEST_CASE("discounted utility refuses a diverging integrand") {
  const Params diverging{0.5, 1.0, 0.5, 0.3};
  Trajectory traj;
  traj.params = diverging;
  TrajectoryRecord r;
  r.t = 0.0;
  r.k = r.h = r.lambda1 = r.lambda2 = r.c = r.l = 1.0;
  r.s = 0.2;
  traj.records.push_back(r);
  CHECK_THROWS_AS(discounted_utility(diverging, traj), divergence_error);
}

TEST_CASE("transversality products decline at rate x") {
  auto [x0, ctr0] = bgp_initial_state(kSetA, 1.0);
  (void)ctr0;
  const Trajectory traj = integrate(kSetA, x0, 20.0);
  for (std::size_t i = 1; i < traj.records.size(); ++i) {
    CHECK(traj.records[i].tv1 < traj.records[i - 1].tv1);
    CHECK(traj.records[i].tv2 < traj.records[i - 1].tv2);
  }
  // slope checked through the full report
  const VerificationReport rep = verify_bgp(kSetA, 1.0, 20.0);
  CHECK(rep.all_pass());
}

TEST_CASE("full verification passes on both reference sets") {
  CHECK(verify_bgp(kSetA, 1.0, 20.0).all_pass());
  // the second set's balanced path is far more unstable; a shorter horizon
  // keeps the saddle divergence of the double-precision initial point below
  // the drift tolerances
  CHECK(verify_bgp(kSetB, 1.0, 2.0).all_pass());
}

TEST_CASE("a perturbed initial costate defeats the rate checks") {
  VerifyOptions opts;
  opts.lambda2_scale = 1.01;
  const VerificationReport rep = verify_bgp(kSetA, 1.0, 20.0, opts);
  CHECK(!rep.all_pass());
  int failed_rate_checks = 0;
  for (const auto& c : rep.checks)
    if (c.name.rfind("rate.", 0) == 0 && !c.pass) ++failed_rate_checks;
  CHECK(failed_rate_checks >= 1);
}

TEST_CASE("the second costate declines at rho - 1 even off the balanced path") {
  // the pointwise labor-price identity forces dlambda2/lambda2 = rho - 1
  // wherever controls solve the first-order conditions
  auto [x0, ctr0] = bgp_initial_state(kSetA, 1.0);
  (void)ctr0;
  x0.costates.lambda2 *= 1.01;
  IntegrateOptions io;
  io.allow_partial = true;
  const Trajectory traj = integrate(kSetA, x0, 12.0, io);
  const EmpiricalRates e = estimate_growth_rates(traj, 0.1);
  CHECK(std::abs(e.lambda2 - (-0.5)) < 1e-6);
  // and the other series have genuinely left their balanced rates
  CHECK(std::abs(e.h - 0.3) > 1e-4);
}

TEST_CASE("integration reports failures with the failing time") {
  auto [x0, ctr0] = bgp_initial_state(kSetB, 1.0);
  (void)ctr0;
  // the saddle divergence eventually drives the solve infeasible
  CHECK_THROWS_AS(integrate(kSetB, x0, 20.0), integration_error);
  IntegrateOptions io;
  io.allow_partial = true;
  const Trajectory partial = integrate(kSetB, x0, 20.0, io);
  CHECK(partial.aborted);
  CHECK(partial.abort_time > 0.0);
  CHECK(!partial.records.empty());
  CHECK(!partial.abort_reason.empty());
}

TEST_CASE("integrate validates its inputs") {
  auto [x0, ctr0] = bgp_initial_state(kSetA, 1.0);
  (void)ctr0;
  IntegrateOptions io;
  io.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate(kSetA, x0, 1.0, io), domain_error);
  CHECK_THROWS_AS(integrate(kSetA, x0, -1.0), domain_error);
  ExtendedState bad = x0;
  bad.state.k = 0.0;
  CHECK_THROWS_AS(integrate(kSetA, bad, 1.0), domain_error);
}
