#include "g2flag/flow.hpp"
#include "g2flag/ricci.hpp"
#include "g2flag/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace g2flag;

namespace {

const QF13 kAlpha = QF13::sqrt13() - QF13(2);
const QF13 kBeta = QF13::sqrt13() + QF13(2);

std::array<QF13, 3> random_mu(SmallRationalRng& rng) {
  return {rng.next_positive_rational(), rng.next_positive_rational(),
          rng.next_positive_rational()};
}

OdeRhs poly_rhs() {
  return [](double, const std::array<double, 3>& p) {
    return eval_field(poly_field(), p);
  };
}

}  // namespace

TEST_CASE("coordinate changes are mutually inverse") {
  SmallRationalRng rng(0xF10);
  for (int trial = 0; trial < 50; ++trial) {
    auto mu = random_mu(rng);
    auto s = mu_to_xyz(mu);
    auto back = xyz_to_mu(s);
    for (int i = 0; i < 3; ++i) CHECK(back[i] == mu[i]);
  }
  auto s = mu_to_xyz({QF13(17), kAlpha, kBeta});
  CHECK(s[0] == QF13(1));
  CHECK(s[1] == QF13(1));
  CHECK(s[2] == QF13(1));
}

TEST_CASE("parameter flow is minus twice the normalized Ricci components") {
  SmallRationalRng rng(0x2B);
  for (int trial = 0; trial < 100; ++trial) {
    auto mu = random_mu(rng);
    auto f = mu_field_exact(mu);
    auto r = ricci_closed(mu);
    for (int i = 0; i < 3; ++i) CHECK(f[i] == QF13(-2) * r[i]);
    // Double version agrees with the exact one.
    auto fd = mu_field({mu[0].to_double(), mu[1].to_double(), mu[2].to_double()});
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(fd[i] - f[i].to_double()) < 1e-12 * (1 + std::abs(fd[i])));
  }
}

TEST_CASE("polynomial system is the time-rescaled flow in the new coordinates") {
  // With s = (x, y, z) as functions of mu and dtau = dt / z, the chain rule
  // applied to the parameter flow must reproduce the polynomial field exactly.
  SmallRationalRng rng(0xCAB);
  const auto& field = poly_field();
  for (int trial = 0; trial < 100; ++trial) {
    auto mu = random_mu(rng);
    auto s = mu_to_xyz(mu);
    auto f = mu_field_exact(mu);
    std::array<QF13, 3> ds;
    ds[0] = kAlpha * (f[0] * mu[1] - mu[0] * f[1]) / (QF13(17) * mu[1] * mu[1]);
    ds[1] = kBeta * (f[0] * mu[2] - mu[0] * f[2]) / (QF13(17) * mu[2] * mu[2]);
    ds[2] = f[0] / QF13(17);
    for (int i = 0; i < 3; ++i)
      CHECK(field[i].eval<QF13>(s[0], s[1], s[2]) == s[2] * ds[i]);
  }
}

TEST_CASE("polynomial field values at the round point") {
  const auto& field = poly_field();
  QF13 one(1);
  CHECK(field[0].eval<QF13>(one, one, one) == qf(-3, 4) + kAlpha.inverse());
  CHECK(field[1].eval<QF13>(one, one, one) == qf(-3, 4) + kBeta.inverse());
  CHECK(field[2].eval<QF13>(one, one, one) == qf(-1, 2));
}

TEST_CASE("integrator basics") {
  auto rhs = poly_rhs();
  IntegrateOptions opt;
  opt.samples = 50;

  // Zero-length request returns the initial point.
  auto t0 = integrate_ode(rhs, {1.0, 1.0, 1.0}, 0, 0, opt);
  REQUIRE(t0.points.size() == 1);
  CHECK(t0.points[0].y == std::array<double, 3>{1.0, 1.0, 1.0});

  // Exponential decay test with a known solution.
  auto decay = [](double, const std::array<double, 3>& y) {
    return std::array<double, 3>{-y[0], -2 * y[1], -3 * y[2]};
  };
  auto traj = integrate_ode(decay, {1.0, 1.0, 1.0}, 0, 2, opt);
  REQUIRE(traj.completed);
  auto last = traj.points.back().y;
  CHECK(std::abs(last[0] - std::exp(-2.0)) < 1e-9);
  CHECK(std::abs(last[1] - std::exp(-4.0)) < 1e-9);
  CHECK(std::abs(last[2] - std::exp(-6.0)) < 1e-9);
}

TEST_CASE("coordinate planes are invariant under the polynomial flow") {
  auto rhs = poly_rhs();
  IntegrateOptions opt;
  opt.samples = 40;
  auto tx = integrate_ode(rhs, {0.0, 0.3, 0.7}, 0, 10, opt);
  for (const auto& pt : tx.points) CHECK(pt.y[0] == 0.0);
  auto ty = integrate_ode(rhs, {0.3, 0.0, 0.7}, 0, 10, opt);
  for (const auto& pt : ty.points) CHECK(pt.y[1] == 0.0);
}

TEST_CASE("generic trajectories converge to the axis attractor") {
  auto rhs = poly_rhs();
  IntegrateOptions opt;
  opt.samples = 60;
  auto traj = integrate_ode(rhs, {1.2, 0.01, 0.5}, 0, 80, opt);
  REQUIRE(traj.completed);
  auto last = traj.points.back().y;
  double q1 = 2 / kAlpha.to_double();
  CHECK(std::abs(last[0] - q1) < 1e-4);
  CHECK(std::abs(last[1]) < 1e-4);
}

TEST_CASE("finite equilibria with eigen-data") {
  auto eqs = finite_equilibria();
  REQUIRE(eqs.size() == 4);
  double alpha = kAlpha.to_double(), beta = kBeta.to_double();

  const auto& q1 = eqs[0];
  CHECK(q1.name == "q1");
  CHECK(std::abs(q1.point[0] - 2 / alpha) < 1e-12);
  CHECK(q1.point[1] == 0.0);
  CHECK(q1.point[2] == 0.0);
  CHECK(q1.classification == "attractor");
  // Eigenvalues -2/alpha^2 and -1/alpha^2 (double), ascending.
  CHECK(std::abs(q1.eigenvalues[0].real() + 2 / (alpha * alpha)) < 1e-10);
  CHECK(std::abs(q1.eigenvalues[1].real() + 1 / (alpha * alpha)) < 1e-10);
  CHECK(std::abs(q1.eigenvalues[2].real() + 1 / (alpha * alpha)) < 1e-10);
  for (const auto& l : q1.eigenvalues) CHECK(l.imag() == 0.0);

  const auto& q2 = eqs[1];
  CHECK(q2.name == "q2");
  CHECK(std::abs(q2.point[1] - 2 / beta) < 1e-12);
  CHECK(q2.classification == "attractor");
  CHECK(std::abs(q2.eigenvalues[0].real() + 2 / (beta * beta)) < 1e-10);
  CHECK(std::abs(q2.eigenvalues[1].real() + 1 / (beta * beta)) < 1e-10);
  CHECK(std::abs(q2.eigenvalues[2].real() + 1 / (beta * beta)) < 1e-10);

  const auto& q3 = eqs[2];
  CHECK(q3.name == "q3");
  CHECK(std::abs(q3.point[0] - 0.0521831) < 5e-6);
  CHECK(std::abs(q3.point[1] - 0.352931) < 5e-6);
  CHECK(q3.point[2] == 0.0);
  CHECK(q3.classification == "saddle");
  CHECK(std::abs(q3.eigenvalues[0].real() + 0.0625182) < 1e-4);
  CHECK(std::abs(q3.eigenvalues[1].real() + 0.0318209) < 1e-4);
  CHECK(std::abs(q3.eigenvalues[2].real() - 0.0306973) < 1e-4);

  const auto& q4 = eqs[3];
  CHECK(q4.name == "q4");
  CHECK(q4.family);
  for (const auto& l : q4.eigenvalues) CHECK(std::abs(l) == 0.0);
}

TEST_CASE("cubic eigenvalue solver on a known matrix") {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(0, 0) = 3;
  m(1, 1) = 1;
  m(2, 2) = 2;
  auto ev = cubic_eigenvalues(m);
  CHECK(std::abs(ev[0] - std::complex<double>(1, 0)) < 1e-12);
  CHECK(std::abs(ev[1] - std::complex<double>(2, 0)) < 1e-12);
  CHECK(std::abs(ev[2] - std::complex<double>(3, 0)) < 1e-12);

  // Rotation block: a complex pair is reported faithfully.
  Eigen::Matrix3d r = Eigen::Matrix3d::Zero();
  r(0, 1) = -1;
  r(1, 0) = 1;
  r(2, 2) = -1;
  auto evr = cubic_eigenvalues(r);
  CHECK(std::abs(evr[0] - std::complex<double>(-1, 0)) < 1e-12);
  CHECK(std::abs(evr[1] - std::complex<double>(0, -1)) < 1e-12);
  CHECK(std::abs(evr[2] - std::complex<double>(0, 1)) < 1e-12);
}

TEST_CASE("collapse diagnostics on the round initial metric") {
  IntegrateOptions opt;
  opt.samples = 400;
  opt.positivity_guard = true;
  auto rhs = [](double, const std::array<double, 3>& mu) {
    std::array<double, 3> c = mu;
    for (double& v : c)
      if (!(v > 1e-100)) v = 1e-100;
    return mu_field(c);
  };
  auto traj = integrate_ode(rhs, {1.0, 1.0, 1.0}, 0, 10, opt);
  CHECK(traj.status == "positivity-stop");
  auto rep = collapse_diagnostics(traj);
  CHECK(rep.z_strictly_decreasing);
  CHECK(rep.collapsed[0]);
  CHECK(rep.collapsed[1]);
  CHECK(!rep.collapsed[2]);
  CHECK(rep.omega_limit == "q1");
  // The stop happens near the finite extinction time.
  CHECK(traj.points.back().t > 1.0);
  CHECK(traj.points.back().t < 1.2);
}
