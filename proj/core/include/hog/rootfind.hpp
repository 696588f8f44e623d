#pragma once

#include <cmath>

namespace hog {

// Expands [lo, hi] outward from a degenerate starting interval until f(lo)
// and f(hi) differ in sign. The step doubles every other probe. Returns
// false when max_steps is exhausted without a sign change.
template <class F>
bool expand_bracket(F&& f, double& lo, double& hi, double& f_lo, double& f_hi,
                    double step, int max_steps) {
  if (f_lo == 0.0 || f_hi == 0.0) return true;
  double d = step;
  for (int i = 0; i < max_steps; ++i) {
    if ((f_lo > 0.0) != (f_hi > 0.0)) return true;
    if (i % 2 == 0) {
      lo -= d;
      f_lo = f(lo);
    } else {
      hi += d;
      f_hi = f(hi);
      d *= 2.0;
    }
  }
  return (f_lo > 0.0) != (f_hi > 0.0);
}

// Safeguarded root refinement on a bracketing interval: alternates secant
// candidates with bisection and never leaves the bracket. Stops when the
// interval shrinks below xtol_rel relative to max(1, |x|).
template <class F>
double find_root(F&& f, double lo, double hi, double f_lo, double f_hi,
                 double xtol_rel, int max_iter) {
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= xtol_rel * std::fmax(1.0, std::fabs(mid))) return mid;
    double x = mid;
    if (i % 2 == 1 && f_hi != f_lo) {
      const double sec = hi - f_hi * (hi - lo) / (f_hi - f_lo);
      const double guard = 1e-3 * (hi - lo);
      if (sec > lo + guard && sec < hi - guard) x = sec;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (f_lo > 0.0)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
      f_hi = fx;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace hog
