#include "hog/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hog/errors.hpp"
#include "hog/foc.hpp"
#include "hog/rootfind.hpp"

namespace hog {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct BgpCandidate {
  ExtendedState xs;
  Controls ctr;
};

// Balanced-growth construction at a trial labor scale l0: the distraction
// share equals h_hat, capital is sized so output per unit capital hits its
// stationary level, consumption follows from the resource constraint, and
// the costates come from the consumption and labor conditions.
BgpCandidate build_candidate(const Params& p, const BgpRates& r, double h0, double l0) {
  const double a = p.rho + p.sigma * r.theta;  // beta * stationary mpk
  const double s0 = r.h_hat * l0;
  const double w0 = l0 - s0;
  const double x0 = h0 / l0 * w0 * w0;
  const double k0 = x0 * std::pow(p.beta / a, 1.0 / (1.0 - p.beta));
  const double c0 = k0 * (a / p.beta - r.theta);
  BgpCandidate cand;
  cand.xs = ExtendedState{
      0.0, {k0, h0}, {std::pow(c0, -p.sigma), l0 * std::pow(w0, p.gamma) / h0}};
  cand.ctr = Controls{c0, s0, l0};
  return cand;
}

// Log residual of the remaining labor-price condition
// (1-beta)*lambda1*k^beta*X^(-beta)*(l-s) = lambda2, strictly decreasing in
// u = log l0 by the power-law structure of the construction.
double labor_price_log_residual(const Params& p, const BgpRates& r, double h0,
                                double u) {
  const BgpCandidate cand = build_candidate(p, r, h0, std::exp(u));
  const double k = cand.xs.state.k;
  const double X = effective_input(cand.xs.state, cand.ctr);
  const double w = cand.ctr.l - cand.ctr.s;
  const double lhs = std::log1p(-p.beta) + std::log(cand.xs.costates.lambda1) +
                     p.beta * std::log(k) - p.beta * std::log(X) + std::log(w);
  return lhs - std::log(cand.xs.costates.lambda2);
}

}  // namespace

double bgp_find_initial_labor(const Params& p, double h0) {
  if (!(h0 > 0.0)) throw domain_error("bgp_find_initial_labor: h0 must be positive");
  const ParamValidation v = validate_params(p);
  if (!v.all_ok())
    throw bracket_error(
        "bgp_find_initial_labor: parameters outside the balanced-growth regime "
        "(need sigma > 1, rho in (0,1), h_hat in (0,1))");
  const BgpRates r = bgp_rates(p);
  auto f = [&](double u) { return labor_price_log_residual(p, r, h0, u); };
  double lo = 0.0, hi = 0.0;
  double f_lo = f(0.0), f_hi = f_lo;
  if (!expand_bracket(f, lo, hi, f_lo, f_hi, 1.0, 64))
    throw bracket_error("bgp_find_initial_labor: no sign change in log l0 over [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
  const double u = find_root(f, lo, hi, f_lo, f_hi, 1e-15, 200);
  return std::exp(u);
}

std::pair<ExtendedState, Controls> bgp_initial_state(const Params& p, double h0) {
  const double l0 = bgp_find_initial_labor(p, h0);
  const BgpCandidate cand = build_candidate(p, bgp_rates(p), h0, l0);
  return {cand.xs, cand.ctr};
}

namespace {

std::array<double, 4> log_state(const ExtendedState& xs) {
  if (!(xs.state.k > 0.0) || !(xs.state.h > 0.0) || !(xs.costates.lambda1 > 0.0) ||
      !(xs.costates.lambda2 > 0.0))
    throw domain_error("integrate: state and costates must be positive");
  return {std::log(xs.state.k), std::log(xs.state.h), std::log(xs.costates.lambda1),
          std::log(xs.costates.lambda2)};
}

// Growth rates of (log k, log h, log lambda1, log lambda2); controls are
// re-solved from the first-order conditions at every evaluation.
std::array<double, 4> log_rates(const Params& p, const std::array<double, 4>& u) {
  const double k = std::exp(u[0]);
  const double h = std::exp(u[1]);
  const double l1 = std::exp(u[2]);
  const double l2 = std::exp(u[3]);
  const Controls ctr = solve_controls(p, k, h, l1, l2);
  const double w = ctr.l - ctr.s;
  const double X = h / ctr.l * w * w;
  const double y = std::pow(k, p.beta) * std::pow(X, 1.0 - p.beta);
  const double lam = (1.0 - p.beta) * l1 * std::pow(k, p.beta) * std::pow(X, -p.beta);
  return {(y - ctr.c) / k, ctr.s / ctr.l,
          p.rho - p.beta * std::pow(k, p.beta - 1.0) * std::pow(X, 1.0 - p.beta),
          p.rho - lam * w * w / (ctr.l * l2) - ctr.s / ctr.l};
}

TrajectoryRecord make_record(const Params& p, double t, const std::array<double, 4>& u) {
  TrajectoryRecord rec;
  rec.t = t;
  rec.k = std::exp(u[0]);
  rec.h = std::exp(u[1]);
  rec.lambda1 = std::exp(u[2]);
  rec.lambda2 = std::exp(u[3]);
  const Controls ctr = solve_controls(p, rec.k, rec.h, rec.lambda1, rec.lambda2);
  rec.c = ctr.c;
  rec.s = ctr.s;
  rec.l = ctr.l;
  const CapitalState st{rec.k, rec.h};
  rec.y = production(p, st, ctr);
  rec.effort = effort(ctr.s, ctr.l);
  rec.mpk = mpk(p, st, ctr);
  const ExtendedState xs{t, st, {rec.lambda1, rec.lambda2}};
  const auto res = foc_residuals(p, xs, ctr);
  const auto scale = foc_residual_scales(p, xs, ctr);
  for (int i = 0; i < 3; ++i) rec.residuals[i] = res[i] / scale[i];
  const double disc = std::exp(-p.rho * t);
  rec.tv1 = rec.k * rec.lambda1 * disc;
  rec.tv2 = rec.h * rec.lambda2 * disc;
  return rec;
}

}  // namespace

Trajectory integrate(const Params& p, const ExtendedState& x0, double t_end,
                     const IntegrateOptions& opts) {
  if (!(opts.rel_tol > 0.0)) throw domain_error("integrate: tolerance must be positive");
  if (t_end < x0.t) throw domain_error("integrate: t_end must be >= x0.t");

  Trajectory traj;
  traj.params = p;
  std::array<double, 4> u = log_state(x0);
  traj.records.push_back(make_record(p, x0.t, u));
  if (t_end == x0.t) return traj;
  if (opts.records < 2)
    throw domain_error("integrate: need at least 2 records for a positive horizon");

  std::array<double, 4> atol;
  for (int i = 0; i < 4; ++i)
    atol[i] = opts.rel_tol * std::max(1.0, std::abs(u[i]));

  auto rhs = [&p](double, const std::array<double, 4>& y) { return log_rates(p, y); };

  double t = x0.t;
  double dt = (t_end - x0.t) / 1024.0;
  StepStats stats;
  try {
    for (int j = 1; j < opts.records; ++j) {
      const double tj =
          x0.t + (t_end - x0.t) * static_cast<double>(j) / (opts.records - 1);
      rk45_advance(rhs, u, t, tj, opts.rel_tol, atol, dt, stats);
      traj.records.push_back(make_record(p, t, u));
    }
  } catch (const integration_error& e) {
    if (!opts.allow_partial) throw;
    traj.aborted = true;
    traj.abort_time = e.where();
    traj.abort_reason = e.what();
  } catch (const error& e) {
    if (!opts.allow_partial)
      throw integration_error(std::string("integrate: ") + e.what(), t);
    traj.aborted = true;
    traj.abort_time = t;
    traj.abort_reason = e.what();
  }
  traj.stats = stats;
  return traj;
}

namespace {

// Least-squares slope of f(record) against t over records with t >= cutoff.
template <class Get>
double regression_slope(const std::vector<TrajectoryRecord>& rs, double cutoff,
                        Get&& get, std::size_t* n_used = nullptr) {
  double st = 0.0, sz = 0.0;
  std::size_t n = 0;
  for (const auto& r : rs) {
    if (r.t < cutoff) continue;
    st += r.t;
    sz += get(r);
    ++n;
  }
  if (n_used) *n_used = n;
  if (n < 2) return kNan;
  const double mt = st / n, mz = sz / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& r : rs) {
    if (r.t < cutoff) continue;
    const double dtc = r.t - mt;
    sxx += dtc * dtc;
    sxy += dtc * (get(r) - mz);
  }
  if (sxx == 0.0) return kNan;
  return sxy / sxx;
}

double burn_in_cutoff(const std::vector<TrajectoryRecord>& rs, double frac) {
  const double t0 = rs.front().t;
  const double t1 = rs.back().t;
  return t0 + frac * (t1 - t0) - 1e-12 * std::max(1.0, std::abs(t1 - t0));
}

}  // namespace

EmpiricalRates estimate_growth_rates(const Trajectory& traj, double burn_in_fraction) {
  if (burn_in_fraction < 0.0 || burn_in_fraction >= 1.0)
    throw domain_error("estimate_growth_rates: burn-in fraction must be in [0,1)");
  const auto& rs = traj.records;
  if (rs.empty()) throw insufficient_data_error("estimate_growth_rates: empty trajectory");
  const double cutoff = burn_in_cutoff(rs, burn_in_fraction);
  std::size_t n = 0;
  for (const auto& r : rs)
    if (r.t >= cutoff) ++n;
  if (n < 10)
    throw insufficient_data_error(
        "estimate_growth_rates: fewer than 10 records after burn-in");

  EmpiricalRates e;
  e.k = regression_slope(rs, cutoff, [](const TrajectoryRecord& r) { return std::log(r.k); });
  e.h = regression_slope(rs, cutoff, [](const TrajectoryRecord& r) { return std::log(r.h); });
  e.c = regression_slope(rs, cutoff, [](const TrajectoryRecord& r) { return std::log(r.c); });
  e.s = regression_slope(rs, cutoff, [](const TrajectoryRecord& r) { return std::log(r.s); });
  e.l = regression_slope(rs, cutoff, [](const TrajectoryRecord& r) { return std::log(r.l); });
  e.lambda1 =
      regression_slope(rs, cutoff, [](const TrajectoryRecord& r) { return std::log(r.lambda1); });
  e.lambda2 =
      regression_slope(rs, cutoff, [](const TrajectoryRecord& r) { return std::log(r.lambda2); });
  return e;
}

double discounted_utility(const Params& p, const Trajectory& traj) {
  const BgpRates r = bgp_rates(p);
  if (r.x >= 0.0)
    throw divergence_error("discounted_utility: integral diverges (x >= 0)");
  const auto& rs = traj.records;
  if (rs.empty()) throw insufficient_data_error("discounted_utility: empty trajectory");

  std::vector<double> g(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    g[i] = std::exp(-p.rho * rs[i].t) * utility(p, Controls{rs[i].c, rs[i].s, rs[i].l});

  // composite Simpson on the evenly spaced records; a 3/8 block absorbs an
  // odd interval count
  double numeric = 0.0;
  const std::size_t m = rs.size() - 1;
  if (m >= 1) {
    const double hstep = (rs.back().t - rs.front().t) / static_cast<double>(m);
    for (std::size_t i = 1; i < rs.size(); ++i)
      if (std::abs((rs[i].t - rs[i - 1].t) - hstep) > 1e-9 * hstep)
        throw domain_error("discounted_utility: records must be evenly spaced");
    if (m == 1) {
      numeric = 0.5 * hstep * (g[0] + g[1]);
    } else {
      std::size_t simpson_end = m;
      bool three_eighth = false;
      if (m % 2 == 1) {
        simpson_end = m - 3;
        three_eighth = true;
      }
      for (std::size_t i = 0; i + 2 <= simpson_end; i += 2)
        numeric += hstep / 3.0 * (g[i] + 4.0 * g[i + 1] + g[i + 2]);
      if (three_eighth) {
        const std::size_t b = m - 3;
        numeric += 3.0 * hstep / 8.0 * (g[b] + 3.0 * g[b + 1] + 3.0 * g[b + 2] + g[b + 3]);
      }
    }
  }

  const auto& last = rs.back();
  const double w = last.l - last.s;
  const double a1 = std::pow(last.c, 1.0 - p.sigma) / (1.0 - p.sigma);
  const double a2 = std::pow(w, 1.0 + p.gamma) / (1.0 + p.gamma);
  return numeric + std::exp(-p.rho * last.t) * (a1 - a2) * (-1.0 / r.x);
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

VerificationReport verify_bgp(const Params& p, double h0, double t_end,
                              const VerifyOptions& opts) {
  VerificationReport rep;
  rep.rates = bgp_rates(p);

  auto [x0, ctr0] = bgp_initial_state(p, h0);
  (void)ctr0;
  x0.costates.lambda2 *= opts.lambda2_scale;

  IntegrateOptions io;
  io.rel_tol = opts.rel_tol;
  io.records = opts.records;
  io.allow_partial = true;
  const Trajectory traj = integrate(p, x0, t_end, io);
  rep.integration_aborted = traj.aborted;
  rep.abort_time = traj.abort_time;
  rep.abort_reason = traj.abort_reason;
  const auto& rs = traj.records;

  auto add = [&rep](std::string name, double expected, double observed, double tol) {
    const bool pass = std::isfinite(observed) && std::abs(observed - expected) <= tol;
    rep.checks.push_back({std::move(name), expected, observed, tol, pass});
  };

  // growth rates of the seven log series
  std::array<double, 7> expect = {rep.rates.theta,       rep.rates.h_hat,
                                  rep.rates.theta,       rep.rates.l_hat,
                                  rep.rates.l_hat,       rep.rates.lambda1_hat,
                                  rep.rates.lambda2_hat};
  std::array<double, 7> got;
  got.fill(kNan);
  try {
    rep.empirical = estimate_growth_rates(traj, opts.burn_in_fraction);
    rep.empirical_valid = true;
    got = rep.empirical.as_array();
  } catch (const error&) {
  }
  static const char* const kRateNames[7] = {
      "rate.log_k", "rate.log_h",       "rate.log_c",      "rate.log_s",
      "rate.log_l", "rate.log_lambda1", "rate.log_lambda2"};
  for (int i = 0; i < 7; ++i) add(kRateNames[i], expect[i], got[i], opts.rate_tol);

  // constancy of the balanced-path ratios, relative to the first record
  auto drift = [&rs](auto&& q) {
    if (rs.empty()) return kNan;
    const double q0 = q(rs.front());
    double d = 0.0;
    for (const auto& r : rs) d = std::max(d, std::abs(q(r) - q0));
    return d / std::abs(q0);
  };
  add("drift.s_over_l", 0.0,
      drift([](const TrajectoryRecord& r) { return r.s / r.l; }), opts.drift_tol);
  add("drift.c_over_k", 0.0,
      drift([](const TrajectoryRecord& r) { return r.c / r.k; }), opts.drift_tol);
  add("drift.mpk", 0.0, drift([](const TrajectoryRecord& r) { return r.mpk; }),
      opts.drift_tol);
  add("drift.y_over_k", 0.0,
      drift([](const TrajectoryRecord& r) { return r.y / r.k; }), opts.drift_tol);
  add("drift.effort", 0.0, drift([](const TrajectoryRecord& r) { return r.effort; }),
      opts.drift_tol);

  // stationary level of output per unit capital
  {
    double dev = kNan;
    if (!rs.empty()) {
      dev = 0.0;
      for (const auto& r : rs)
        dev = std::max(dev, std::abs(r.mpk - rep.rates.mpk) / rep.rates.mpk);
    }
    add("level.mpk", 0.0, dev, opts.drift_tol);
  }

  // first-order-condition fidelity
  {
    double rmax = kNan;
    if (!rs.empty()) {
      rmax = 0.0;
      for (const auto& r : rs)
        for (double v : r.residuals) rmax = std::max(rmax, std::abs(v));
    }
    add("foc.max_residual", 0.0, rmax, opts.residual_tol);
  }

  // transversality products: log-slope x and monotone decline
  {
    const double cutoff = rs.empty() ? 0.0 : burn_in_cutoff(rs, opts.burn_in_fraction);
    std::size_t n1 = 0, n2 = 0;
    const double s1 = rs.empty() ? kNan
                                 : regression_slope(
                                       rs, cutoff,
                                       [](const TrajectoryRecord& r) { return std::log(r.tv1); },
                                       &n1);
    const double s2 = rs.empty() ? kNan
                                 : regression_slope(
                                       rs, cutoff,
                                       [](const TrajectoryRecord& r) { return std::log(r.tv2); },
                                       &n2);
    add("tv.slope_k_lambda1", rep.rates.x, n1 >= 10 ? s1 : kNan, opts.tv_slope_tol);
    add("tv.slope_h_lambda2", rep.rates.x, n2 >= 10 ? s2 : kNan, opts.tv_slope_tol);
    bool mono1 = rs.size() >= 2, mono2 = rs.size() >= 2;
    for (std::size_t i = 1; i < rs.size(); ++i) {
      if (!(rs[i].tv1 < rs[i - 1].tv1)) mono1 = false;
      if (!(rs[i].tv2 < rs[i - 1].tv2)) mono2 = false;
    }
    add("tv.monotone_k_lambda1", 1.0, mono1 ? 1.0 : 0.0, 0.0);
    add("tv.monotone_h_lambda2", 1.0, mono2 ? 1.0 : 0.0, 0.0);
  }

  // discounted utility: quadrature against the closed form at the initial point
  {
    double relerr = kNan;
    try {
      const auto& r0 = rs.front();
      const double closed = utility_closed_form(p, r0.c, r0.l, r0.s);
      const double numeric = discounted_utility(p, traj);
      relerr = std::abs(numeric - closed) / std::abs(closed);
    } catch (const error&) {
    }
    add("utility.quadrature_vs_closed_form", 0.0, relerr, opts.utility_rel_tol);
  }

  // closed-form identities
  add("identity.rate_composition", 0.0,
      std::abs(growth_composition_residual(rep.rates)), opts.identity_tol);
  add("identity.output_growth", 0.0,
      std::abs(output_growth_rate(p, rep.rates) - rep.rates.theta), opts.identity_tol);

  add("integration.completed", 1.0, traj.aborted ? 0.0 : 1.0, 0.0);
  return rep;
}

}  // namespace hog
