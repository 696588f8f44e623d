#include "hog/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "hog/csv.hpp"
#include "hog/errors.hpp"
#include "hog/rng.hpp"

namespace hog::cli {

namespace {

constexpr const char* kRatesColumns =
    "h_hat,theta,l_hat,lambda2_hat,lambda1_hat,x,mpk,effort,ies";
constexpr const char* kFlagColumns =
    "basic_domain,denominator,convergence_regime,bgp_feasible";

std::array<double, 9> rates_row(const BgpRates& r) {
  return {r.h_hat, r.theta,      r.l_hat, r.lambda2_hat, r.lambda1_hat,
          r.x,     r.mpk,        r.effort_bgp, r.ies};
}

std::array<const char*, 9> rates_names() {
  return {"h_hat", "theta", "l_hat", "lambda2_hat", "lambda1_hat",
          "x",     "mpk",   "effort", "ies"};
}

BgpRates rates_or_nan(const Params& p, bool& degenerate) {
  degenerate = false;
  try {
    return bgp_rates(p);
  } catch (const degenerate_error&) {
    degenerate = true;
    BgpRates r;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.h_hat = r.theta = r.l_hat = r.lambda1_hat = r.lambda2_hat = nan;
    r.x = r.mpk = r.effort_bgp = r.ies = nan;
    return r;
  }
}

void append_flags(std::string& row, const ParamValidation& v) {
  row += v.basic_domain_ok ? "1" : "0";
  row += ',';
  row += v.denominator_ok ? "1" : "0";
  row += ',';
  row += v.convergence_regime_ok ? "1" : "0";
  row += ',';
  row += v.bgp_feasible ? "1" : "0";
}

std::string regime_message(const ParamValidation& v) {
  std::string msg = "parameters outside the balanced-growth regime:";
  if (!v.basic_domain_ok) msg += " basic-domain";
  if (!v.denominator_ok) msg += " denominator";
  if (!v.convergence_regime_ok) msg += " convergence-regime";
  if (!v.bgp_feasible) msg += " bgp-feasibility";
  msg += " check(s) failed";
  return msg;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path);
  if (!f) throw io_error("cannot open output file: " + path);
  f << contents;
  f.flush();
  if (!f) throw io_error("write failed: " + path);
}

}  // namespace

std::string rates_csv(const Params& p) {
  const ParamValidation v = validate_params(p);
  bool degenerate = false;
  const BgpRates r = rates_or_nan(p, degenerate);
  std::string out = std::string("sigma,gamma,rho,beta,") + kRatesColumns + "," +
                    kFlagColumns + "\n";
  out += g17(p.sigma) + "," + g17(p.gamma) + "," + g17(p.rho) + "," + g17(p.beta);
  for (double x : rates_row(r)) out += "," + g17(x);
  out += ",";
  append_flags(out, v);
  out += "\n";
  return out;
}

int cmd_rates(const RunConfig& cfg, const RatesOptions& opts, std::ostream& out) {
  const ParamValidation v = validate_params(cfg.params);
  bool degenerate = false;
  const BgpRates r = rates_or_nan(cfg.params, degenerate);
  if (opts.csv) {
    out << rates_csv(cfg.params);
  } else {
    out << "parameters: sigma=" << cfg.params.sigma << " gamma=" << cfg.params.gamma
        << " rho=" << cfg.params.rho << " beta=" << cfg.params.beta << "\n";
    const auto names = rates_names();
    const auto row = rates_row(r);
    out << std::setprecision(12);
    for (std::size_t i = 0; i < names.size(); ++i)
      out << "  " << std::left << std::setw(14) << names[i] << row[i] << "\n";
    out << "flags: basic domain " << (v.basic_domain_ok ? "OK" : "FAIL")
        << " | denominator " << (v.denominator_ok ? "OK" : "FAIL")
        << " | convergence regime " << (v.convergence_regime_ok ? "OK" : "FAIL")
        << " | bgp feasible " << (v.bgp_feasible ? "OK" : "FAIL") << "\n";
  }
  const bool ok = v.all_ok() && !degenerate;
  return opts.strict && !ok ? 1 : 0;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
  os << "t,k,h,lambda1,lambda2,c,s,l,y,effort,mpk,res1,res2,res3,tv1,tv2\n";
  for (const auto& r : traj.records) {
    os << g17(r.t) << ',' << g17(r.k) << ',' << g17(r.h) << ',' << g17(r.lambda1)
       << ',' << g17(r.lambda2) << ',' << g17(r.c) << ',' << g17(r.s) << ','
       << g17(r.l) << ',' << g17(r.y) << ',' << g17(r.effort) << ',' << g17(r.mpk)
       << ',' << g17(r.residuals[0]) << ',' << g17(r.residuals[1]) << ','
       << g17(r.residuals[2]) << ',' << g17(r.tv1) << ',' << g17(r.tv2) << '\n';
  }
}

int cmd_simulate(const RunConfig& cfg, const SimulateOptions& opts, std::ostream& log) {
  const ParamValidation v = validate_params(cfg.params);
  if (!v.all_ok()) throw config_error("simulate: " + regime_message(v));

  auto [x0, ctr0] = bgp_initial_state(cfg.params, cfg.h0);
  (void)ctr0;
  x0.costates.lambda2 *= opts.lambda2_scale;

  IntegrateOptions io;
  io.rel_tol = cfg.tol;
  io.records = static_cast<int>(cfg.records);
  io.allow_partial = true;
  const Trajectory traj = integrate(cfg.params, x0, cfg.t_end, io);

  std::ostringstream body;
  write_trajectory_csv(traj, body);
  const std::string path = cfg.out_prefix + "trajectory.csv";
  write_file(path, body.str());
  log << "wrote " << path << " (" << traj.records.size() << " records)\n";
  if (traj.aborted)
    log << "integration aborted at t=" << traj.abort_time << ": " << traj.abort_reason
        << "\n";
  return 0;
}

void print_verification_report(const VerificationReport& rep, std::ostream& os) {
  os << std::left << std::setw(36) << "check" << std::setw(18) << "expected"
     << std::setw(18) << "observed" << std::setw(12) << "tolerance" << "status\n";
  std::size_t passed = 0;
  for (const auto& c : rep.checks) {
    std::ostringstream e, o, t;
    e << std::setprecision(10) << c.expected;
    o << std::setprecision(10) << c.observed;
    t << std::setprecision(3) << c.tolerance;
    os << std::left << std::setw(36) << c.name << std::setw(18) << e.str()
       << std::setw(18) << o.str() << std::setw(12) << t.str()
       << (c.pass ? "PASS" : "FAIL") << "\n";
    if (c.pass) ++passed;
  }
  if (rep.integration_aborted)
    os << "integration aborted at t=" << rep.abort_time << ": " << rep.abort_reason
       << "\n";
  os << passed << "/" << rep.checks.size() << " checks passed\n";
}

int cmd_verify(const RunConfig& cfg, const VerifyCommandOptions& opts,
               std::ostream& out) {
  const ParamValidation v = validate_params(cfg.params);
  if (!v.all_ok()) {
    out << "verify: " << regime_message(v) << "\n";
    return 2;
  }
  VerifyOptions vo;
  vo.rel_tol = cfg.tol;
  vo.records = static_cast<int>(cfg.records);
  vo.lambda2_scale = opts.lambda2_scale;
  const VerificationReport rep = verify_bgp(cfg.params, cfg.h0, cfg.t_end, vo);
  print_verification_report(rep, out);
  return rep.all_pass() ? 0 : 1;
}

std::string sweep_csv(const RunConfig& cfg) {
  std::vector<int> axes;
  for (std::size_t i = 0; i < cfg.sweep.size(); ++i)
    if (cfg.sweep[i].active) axes.push_back(static_cast<int>(i));
  if (axes.empty()) throw config_error("sweep: no sweep axes configured");

  std::string out;
  for (int a : axes) {
    out += kSweepParamNames[a];
    out += ',';
  }
  out += kRatesColumns;
  out += ',';
  out += kFlagColumns;
  out += '\n';

  long total = 1;
  for (int a : axes) total *= cfg.sweep[a].count;

  // lexicographic order: the first configured axis varies slowest
  for (long li = 0; li < total; ++li) {
    long rem = li;
    Params q = cfg.params;
    std::string row;
    for (std::size_t ai = 0; ai < axes.size(); ++ai) {
      long stride = 1;
      for (std::size_t aj = ai + 1; aj < axes.size(); ++aj)
        stride *= cfg.sweep[axes[aj]].count;
      const long idx = rem / stride;
      rem %= stride;
      const double value = cfg.sweep[axes[ai]].value(idx);
      switch (axes[ai]) {
        case 0: q.sigma = value; break;
        case 1: q.gamma = value; break;
        case 2: q.rho = value; break;
        case 3: q.beta = value; break;
      }
      row += g17(value);
      row += ',';
    }
    const ParamValidation v = validate_params(q);
    bool degenerate = false;
    const BgpRates r = rates_or_nan(q, degenerate);
    for (double x : rates_row(r)) {
      row += g17(x);
      row += ',';
    }
    append_flags(row, v);
    out += row;
    out += '\n';
  }
  return out;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& log) {
  const std::string csv = sweep_csv(cfg);
  const std::string path = cfg.out_prefix + "sweep.csv";
  write_file(path, csv);
  const auto rows = std::count(csv.begin(), csv.end(), '\n') - 1;
  log << "wrote " << path << " (" << rows << " rows)\n";
  return 0;
}

int cmd_gradcheck(const RunConfig& cfg, const GradcheckOptions& opts,
                  std::ostream& out) {
  if (!(opts.step > 0.0))
    throw config_error("gradcheck: finite-difference step must be positive");
  if (opts.points < 1) throw config_error("gradcheck: need at least one point");
  const ParamValidation v = validate_params(cfg.params);
  if (!v.basic_domain_ok)
    throw config_error("gradcheck: parameters fail basic domain checks");

  const Params& p = cfg.params;
  Rng rng(opts.seed);
  double worst = 0.0;
  int worst_point = -1;
  const char* worst_partial = "";
  static const char* const kPartialNames[5] = {"H_c", "H_s", "H_l", "H_k", "H_h"};

  for (int i = 0; i < opts.points; ++i) {
    ExtendedState xs;
    xs.state.k = rng.log_uniform(0.2, 5.0);
    xs.state.h = rng.log_uniform(0.2, 5.0);
    xs.costates.lambda1 = rng.log_uniform(0.2, 5.0);
    xs.costates.lambda2 = rng.log_uniform(0.2, 5.0);
    Controls ctr;
    ctr.c = rng.log_uniform(0.2, 5.0);
    ctr.l = rng.log_uniform(0.5, 3.0);
    ctr.s = rng.uniform(0.05, 0.85) * ctr.l;

    const HamiltonianGradient g = hamiltonian_partials(p, xs, ctr);
    const double analytic[5] = {g.dc, g.ds, g.dl, g.dk, g.dh};
    double* const targets[5] = {&ctr.c, &ctr.s, &ctr.l, &xs.state.k, &xs.state.h};
    for (int j = 0; j < 5; ++j) {
      const double v0 = *targets[j];
      const double dv = opts.step * v0;
      *targets[j] = v0 + dv;
      const double up = hamiltonian(p, xs, ctr);
      *targets[j] = v0 - dv;
      const double dn = hamiltonian(p, xs, ctr);
      *targets[j] = v0;
      const double fd = (up - dn) / (2.0 * dv);
      const double rel = std::abs(analytic[j] - fd) /
                         std::max({std::abs(analytic[j]), std::abs(fd), 1e-12});
      if (rel > worst) {
        worst = rel;
        worst_point = i;
        worst_partial = kPartialNames[j];
      }
    }
  }

  out << "gradient check: " << opts.points << " points, seed " << opts.seed
      << ", relative step " << g17(opts.step) << "\n";
  out << "max relative error: " << g17(worst) << " (" << worst_partial << ", point "
      << worst_point << ")\n";
  const bool ok = worst < 1e-6;
  out << (ok ? "PASS" : "FAIL") << " (tolerance 1e-06)\n";
  return ok ? 0 : 1;
}

}  // namespace hog::cli
