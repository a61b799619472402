#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace g2flag {

using OdeRhs = std::function<std::array<double, 3>(double, const std::array<double, 3>&)>;

struct TrajectoryPoint {
  double t = 0;
  std::array<double, 3> y{};
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  bool completed = false;  // reached t_end
  std::string status;      // "ok", "positivity-stop", "step-underflow"
};

struct IntegrateOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int samples = 200;  // dense-output points, endpoints included
  bool positivity_guard = false;
  double positivity_floor = 1e-14;
};

/// Adaptive Dormand-Prince 5(4) with step rejection and cubic Hermite dense
/// output at evenly spaced sample times.  With the positivity guard enabled
/// the run stops (flagged) as soon as a component falls below the floor.
Trajectory integrate_ode(const OdeRhs& f, const std::array<double, 3>& y0, double t0,
                         double t1, const IntegrateOptions& opt = {});

}  // namespace g2flag
