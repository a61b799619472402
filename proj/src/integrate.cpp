#include "g2flag/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace g2flag {

namespace {

using V3 = std::array<double, 3>;

V3 axpy(const V3& y, double h, const V3& d) {
  return {y[0] + h * d[0], y[1] + h * d[1], y[2] + h * d[2]};
}

// Dormand-Prince RK5(4)7M tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Step {
  double t0, t1;
  V3 y0, y1, f0, f1;  // endpoint values and derivatives for Hermite
};

V3 hermite(const Step& s, double t) {
  double h = s.t1 - s.t0;
  double u = (t - s.t0) / h;
  double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
  double h10 = u * (1 - u) * (1 - u);
  double h01 = u * u * (3 - 2 * u);
  double h11 = u * u * (u - 1);
  V3 out;
  for (int i = 0; i < 3; ++i)
    out[i] = h00 * s.y0[i] + h * h10 * s.f0[i] + h01 * s.y1[i] + h * h11 * s.f1[i];
  return out;
}

}  // namespace

Trajectory integrate_ode(const OdeRhs& f, const V3& y0, double t0, double t1,
                         const IntegrateOptions& opt) {
  if (opt.samples < 1) throw std::invalid_argument("samples must be >= 1");
  Trajectory traj;
  if (t1 == t0) {
    traj.points.push_back({t0, y0});
    traj.completed = true;
    traj.status = "ok";
    return traj;
  }
  const double dir = t1 > t0 ? 1.0 : -1.0;
  std::vector<Step> steps;

  V3 y = y0;
  double t = t0;
  V3 k1 = f(t, y);
  double h = dir * std::min(1e-3, std::abs(t1 - t0) / 10);
  bool underflow = false, guard_stop = false;

  while (dir * (t1 - t) > 0) {
    if (dir * (t + h - t1) > 0) h = t1 - t;
    V3 k2 = f(t + c2 * h, axpy(y, h, {a21 * k1[0], a21 * k1[1], a21 * k1[2]}));
    V3 y3s, y4s, y5s, y6s;
    for (int i = 0; i < 3; ++i) y3s[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    V3 k3 = f(t + c3 * h, y3s);
    for (int i = 0; i < 3; ++i) y4s[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    V3 k4 = f(t + c4 * h, y4s);
    for (int i = 0; i < 3; ++i)
      y5s[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    V3 k5 = f(t + c5 * h, y5s);
    for (int i = 0; i < 3; ++i)
      y6s[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    V3 k6 = f(t + h, y6s);
    V3 ynew;
    for (int i = 0; i < 3; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    V3 k7 = f(t + h, ynew);

    double err = 0;
    for (int i = 0; i < 3; ++i) {
      double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                       e7 * k7[i]);
      double sc = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      double ri = std::abs(ei) / sc;
      // Overflow or NaN anywhere in the step means reject and shrink.
      if (!std::isfinite(ri) || !std::isfinite(ynew[i])) ri = 1e12;
      if (ri > err) err = ri;
    }

    if (err <= 1.0) {
      steps.push_back({t, t + h, y, ynew, k1, k7});
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      if (opt.positivity_guard) {
        bool below = false;
        for (double v : y)
          if (v < opt.positivity_floor) below = true;
        if (below) {
          guard_stop = true;
          break;
        }
      }
    }
    double factor = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    factor = std::clamp(factor, 0.2, 5.0);
    h *= factor;
    if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t))) {
      underflow = true;
      break;
    }
  }

  traj.completed = !underflow && !guard_stop;
  traj.status = underflow ? "step-underflow" : (guard_stop ? "positivity-stop" : "ok");

  // Dense output on an even grid of the covered interval.
  double t_end = steps.empty() ? t0 : steps.back().t1;
  int n = opt.samples;
  std::size_t si = 0;
  for (int i = 0; i < n; ++i) {
    double ti = n == 1 ? t_end : t0 + (t_end - t0) * i / (n - 1);
    if (steps.empty()) {
      traj.points.push_back({ti, y0});
      continue;
    }
    while (si + 1 < steps.size() && dir * (ti - steps[si].t1) > 0) ++si;
    traj.points.push_back({ti, hermite(steps[si], ti)});
  }
  return traj;
}

}  // namespace g2flag
