#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "hog/errors.hpp"

namespace hog {

struct StepStats {
  long accepted = 0;
  long rejected = 0;
};

// Dormand-Prince 5(4): explicit embedded pair, error estimated from the
// difference between the fifth- and fourth-order solutions. Advances y from
// t to exactly t_target (t_target > t), adapting the step size dt, which
// persists across calls. Throws integration_error on step underflow.
template <std::size_t N, class Rhs>
void rk45_advance(Rhs&& rhs, std::array<double, N>& y, double& t, double t_target,
                  double rtol, const std::array<double, N>& atol, double& dt,
                  StepStats& stats) {
  static constexpr double a21 = 1.0 / 5.0;
  static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                          a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                          a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                          a65 = -5103.0 / 18656.0;
  static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                          b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
  // b - b* rows collapsed: weights of the error estimate
  static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                          e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
  static constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                          c5 = 8.0 / 9.0;

  const double span = t_target - t;
  if (!(span > 0.0)) return;
  const double tiny = 1e-14 * std::fmax(1.0, std::fabs(t_target));
  if (!(dt > 0.0) || !std::isfinite(dt)) dt = span / 100.0;

  std::array<double, N> k1, k2, k3, k4, k5, k6, k7, tmp, y5;
  while (t_target - t > tiny) {
    const double h = std::fmin(dt, t_target - t);
    k1 = rhs(t, y);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    k2 = rhs(t + c2 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = rhs(t + c3 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = rhs(t + c4 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = rhs(t + c5 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                           a65 * k5[i]);
    k6 = rhs(t + h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    k7 = rhs(t + h, y5);

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
      const double sc = atol[i] + rtol * std::fmax(std::fabs(y[i]), std::fabs(y5[i]));
      err = std::fmax(err, std::fabs(ei) / sc);
    }

    if (err <= 1.0) {
      t += h;
      y = y5;
      ++stats.accepted;
      const double f = err == 0.0 ? 5.0
                                  : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      dt = h * f;
    } else {
      ++stats.rejected;
      dt = h * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
    }
    if (dt < 32.0 * std::numeric_limits<double>::epsilon() * std::fmax(1.0, std::fabs(t)))
      throw integration_error("rk45: step size underflow", t);
  }
  t = t_target;
}

}  // namespace hog
