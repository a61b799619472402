#pragma once

#include "g2flag/integrate.hpp"
#include "g2flag/poly.hpp"

#include <Eigen/Dense>

#include <complex>

namespace g2flag {

/// Right-hand side of the metric-parameter flow, exact and double versions.
std::array<QF13, 3> mu_field_exact(const std::array<QF13, 3>& mu);
std::array<double, 3> mu_field(const std::array<double, 3>& mu);

/// Change of variables between metric parameters and the rescaled (x,y,z)
/// coordinates, mutually inverse on the open positive octant.
std::array<QF13, 3> mu_to_xyz(const std::array<QF13, 3>& mu);
std::array<QF13, 3> xyz_to_mu(const std::array<QF13, 3>& s);
std::array<double, 3> mu_to_xyz(const std::array<double, 3>& mu);
std::array<double, 3> xyz_to_mu(const std::array<double, 3>& s);

/// The polynomial system in (x,y,z) after the time rescaling t = z*tau.
const std::array<PolyQ, 3>& poly_field();

struct Equilibrium {
  std::string name;
  std::array<double, 3> point;
  std::array<std::complex<double>, 3> eigenvalues;
  std::vector<std::array<std::complex<double>, 3>> eigenvectors;
  std::string classification;  // attractor / source / saddle / nonhyperbolic
  bool family = false;         // representative of a one-parameter family
  std::string note;
};

/// Equilibria of poly_field with x,y,z >= 0.
std::vector<Equilibrium> finite_equilibria();

Eigen::Matrix3d jacobian_at(const std::array<PolyQ, 3>& field,
                            const std::array<double, 3>& p);

/// Eigenvalues of a real 3x3 matrix via the characteristic cubic in closed
/// form (complex-capable), sorted by real part ascending.
std::array<std::complex<double>, 3> cubic_eigenvalues(const Eigen::Matrix3d& j);

/// Sign-pattern classification with |Re| < 1e-9 treated as zero.
std::string classify_eigenvalues(const std::array<std::complex<double>, 3>& ev);

/// Full linearization report of a field at a point (must be an equilibrium:
/// residual below 1e-10).
Equilibrium linearize(const std::array<PolyQ, 3>& field, const std::array<double, 3>& point,
                      const std::string& name);

std::array<double, 3> eval_field(const std::array<PolyQ, 3>& field,
                                 const std::array<double, 3>& p);

struct CollapseReport {
  std::array<bool, 3> monotone_decreasing{};
  std::array<double, 3> initial{}, terminal{};
  std::array<bool, 3> collapsed{};  // terminal below threshold * initial
  bool z_strictly_decreasing = false;
  std::array<double, 3> xyz_terminal{};
  std::string omega_limit;  // "q1", "q2", "q3", or "unknown"
};

/// Diagnostics over a trajectory of metric parameters (mu frame samples).
CollapseReport collapse_diagnostics(const Trajectory& traj, double threshold = 1e-3);

}  // namespace g2flag
