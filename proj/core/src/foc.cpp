#include "hog/foc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "hog/errors.hpp"

namespace hog {

Controls solve_controls(const Params& p, double k, double h, double lambda1,
                        double lambda2) {
  if (!(k > 0.0) || !(h > 0.0) || !(lambda1 > 0.0) || !(lambda2 > 0.0))
    throw domain_error("solve_controls: state and costates must be positive");
  if (!(p.sigma > 0.0))
    throw domain_error("solve_controls: sigma must be positive");
  const double expo = 1.0 - p.beta * (2.0 + p.gamma);
  if (expo == 0.0)
    throw degenerate_error("solve_controls: degenerate exponent 1 - beta*(2+gamma) == 0");

  const double c = std::pow(lambda1, -1.0 / p.sigma);

  // power-law collapse evaluated in logs to keep extreme exponents finite
  const double log_w = ((1.0 - p.beta) * std::log(lambda2) - std::log1p(-p.beta) -
                        std::log(lambda1) - p.beta * std::log(k)) /
                       expo;
  const double w = std::exp(log_w);
  const double l = std::exp(std::log(lambda2) + std::log(h) - p.gamma * log_w);
  if (!std::isfinite(w) || !(w > 0.0) || !std::isfinite(l) || !(l > 0.0))
    throw domain_error("solve_controls: control magnitudes overflow the double range");
  const double s = l - w;
  if (s < 0.0)
    throw infeasible_error(
        "solve_controls: no interior solution with s >= 0 at this point");
  return Controls{c, s, l};
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

using Vec3 = std::array<double, 3>;  // (c, s, l)

// Hamiltonian without the throwing domain checks; invalid points get -inf.
double hamiltonian_value(const Params& p, double k, double h, double lambda1,
                         double lambda2, const Vec3& v, double share_cap) {
  const double c = v[0], s = v[1], l = v[2];
  if (!(c > 0.0) || !(l > 0.0) || s < 0.0) return kNegInf;
  if (s > share_cap * l) return kNegInf;
  const double w = l - s;
  if (!(w > 0.0)) return kNegInf;
  const double X = h / l * w * w;
  const double payoff = std::pow(c, 1.0 - p.sigma) / (1.0 - p.sigma) -
                        std::pow(w, 1.0 + p.gamma) / (1.0 + p.gamma);
  const double y = std::pow(k, p.beta) * std::pow(X, 1.0 - p.beta);
  return payoff + lambda1 * (y - c) + lambda2 * h * s / l;
}

struct BoxSearch {
  const Params& p;
  double k, h, lambda1, lambda2;
  Vec3 lo, hi;
  double cap;

  double eval(const Vec3& v) const {
    return hamiltonian_value(p, k, h, lambda1, lambda2, v, cap);
  }

  Vec3 clamp(Vec3 v) const {
    for (int d = 0; d < 3; ++d) v[d] = std::clamp(v[d], lo[d], hi[d]);
    return v;
  }
};

// Nelder-Mead ascent inside the box, started from a lattice incumbent.
// Candidate vertices are projected back into the box, so the walk can pin
// itself to a face when the maximum sits there.
void nelder_mead(const BoxSearch& box, Vec3& best, double& best_v) {
  constexpr int kMaxIter = 600;
  std::array<Vec3, 4> x;
  std::array<double, 4> f;
  x[0] = best;
  f[0] = best_v;
  for (int d = 0; d < 3; ++d) {
    Vec3 v = best;
    const double step = 0.05 * (box.hi[d] - box.lo[d]);
    v[d] = (v[d] + step <= box.hi[d]) ? v[d] + step : v[d] - step;
    x[d + 1] = box.clamp(v);
    f[d + 1] = box.eval(x[d + 1]);
  }

  auto order = [&] {
    for (int i = 1; i < 4; ++i)
      for (int j = i; j > 0 && f[j] > f[j - 1]; --j) {
        std::swap(f[j], f[j - 1]);
        std::swap(x[j], x[j - 1]);
      }
  };

  for (int it = 0; it < kMaxIter; ++it) {
    order();
    double spread = 0.0;
    for (int d = 0; d < 3; ++d)
      spread = std::max(spread, (std::abs(x[0][d] - x[3][d])) /
                                    std::max(1.0, std::abs(x[0][d])));
    if (spread < 1e-11) break;

    Vec3 centroid{};
    for (int i = 0; i < 3; ++i)
      for (int d = 0; d < 3; ++d) centroid[d] += x[i][d] / 3.0;

    auto along = [&](double t) {
      Vec3 v;
      for (int d = 0; d < 3; ++d) v[d] = centroid[d] + t * (centroid[d] - x[3][d]);
      return box.clamp(v);
    };

    const Vec3 xr = along(1.0);
    const double fr = box.eval(xr);
    if (fr > f[0]) {
      const Vec3 xe = along(2.0);
      const double fe = box.eval(xe);
      if (fe > fr) {
        x[3] = xe;
        f[3] = fe;
      } else {
        x[3] = xr;
        f[3] = fr;
      }
    } else if (fr > f[2]) {
      x[3] = xr;
      f[3] = fr;
    } else {
      const Vec3 xc = along(fr > f[3] ? 0.5 : -0.5);
      const double fc = box.eval(xc);
      if (fc > std::max(fr, f[3])) {
        x[3] = xc;
        f[3] = fc;
      } else {
        for (int i = 1; i < 4; ++i) {
          for (int d = 0; d < 3; ++d) x[i][d] = x[0][d] + 0.5 * (x[i][d] - x[0][d]);
          f[i] = box.eval(x[i]);
        }
      }
    }
  }
  order();
  if (f[0] > best_v) {
    best = x[0];
    best_v = f[0];
  }
}

}  // namespace

BruteForceResult brute_force_controls(const Params& p, double k, double h,
                                      double lambda1, double lambda2,
                                      const GridSpec& grid) {
  if (!(k > 0.0) || !(h > 0.0))
    throw domain_error("brute_force_controls: capital stocks must be positive");
  if (!(grid.c_lo > 0.0) || !(grid.c_hi > grid.c_lo) || grid.s_lo < 0.0 ||
      !(grid.s_hi > grid.s_lo) || !(grid.l_lo > 0.0) || !(grid.l_hi > grid.l_lo))
    throw domain_error("brute_force_controls: malformed search box");
  if (grid.points_per_dim < 5)
    throw domain_error("brute_force_controls: need at least 5 points per dimension");
  if (!(grid.max_distraction_share > 0.0) || !(grid.max_distraction_share < 1.0))
    throw domain_error("brute_force_controls: distraction share cap must be in (0,1)");

  const BoxSearch box{p,
                      k,
                      h,
                      lambda1,
                      lambda2,
                      {grid.c_lo, grid.s_lo, grid.l_lo},
                      {grid.c_hi, grid.s_hi, grid.l_hi},
                      grid.max_distraction_share};

  // dense lattice pass; keep a handful of well-separated leaders as starts
  // for the local refinement (the surface can carry a secondary ridge)
  const int n = grid.points_per_dim;
  struct Leader {
    Vec3 v;
    double f = kNegInf;
  };
  std::vector<Leader> leaders;
  const int max_leaders = 4;
  auto cell = [&](const Vec3& a, const Vec3& b) {
    for (int d = 0; d < 3; ++d) {
      const double spacing = (box.hi[d] - box.lo[d]) / (n - 1);
      if (std::abs(a[d] - b[d]) > 2.0 * spacing) return false;
    }
    return true;  // same neighborhood
  };

  for (int ic = 0; ic < n; ++ic) {
    for (int is = 0; is < n; ++is) {
      for (int il = 0; il < n; ++il) {
        const Vec3 v = {box.lo[0] + (box.hi[0] - box.lo[0]) * ic / (n - 1),
                        box.lo[1] + (box.hi[1] - box.lo[1]) * is / (n - 1),
                        box.lo[2] + (box.hi[2] - box.lo[2]) * il / (n - 1)};
        const double f = box.eval(v);
        if (f == kNegInf) continue;
        bool merged = false;
        for (auto& ld : leaders) {
          if (cell(ld.v, v)) {
            if (f > ld.f) {
              ld.v = v;
              ld.f = f;
            }
            merged = true;
            break;
          }
        }
        if (!merged) leaders.push_back({v, f});
        std::sort(leaders.begin(), leaders.end(),
                  [](const Leader& a, const Leader& b) { return a.f > b.f; });
        if (static_cast<int>(leaders.size()) > max_leaders) leaders.pop_back();
      }
    }
  }
  if (leaders.empty())
    throw domain_error("brute_force_controls: no feasible point in the search box");

  Vec3 best{};
  double best_v = kNegInf;
  for (const auto& ld : leaders) {
    Vec3 v = ld.v;
    double fv = ld.f;
    nelder_mead(box, v, fv);
    if (fv > best_v) {
      best = v;
      best_v = fv;
    }
  }

  BruteForceResult res;
  res.controls = Controls{best[0], best[1], best[2]};
  res.value = best_v;
  bool on_edge = false;
  for (int d = 0; d < 3; ++d) {
    const double span = box.hi[d] - box.lo[d];
    const double eps = 1e-6 * span + 1e-12;
    if (std::abs(best[d] - box.lo[d]) <= eps || std::abs(best[d] - box.hi[d]) <= eps)
      on_edge = true;
  }
  if (best[1] >= grid.max_distraction_share * best[2] * (1.0 - 1e-6)) on_edge = true;
  res.on_boundary = on_edge;
  return res;
}

}  // namespace hog
