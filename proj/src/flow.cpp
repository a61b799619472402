#include "g2flag/flow.hpp"

#include "g2flag/ricci.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace g2flag {

namespace {

const QF13 kAlpha = QF13::sqrt13() - QF13(2);
const QF13 kBeta = QF13::sqrt13() + QF13(2);

void require_positive(const std::array<QF13, 3>& v) {
  for (const auto& c : v)
    if (c.sign() <= 0) throw std::domain_error("coordinates must be positive");
}

void require_positive(const std::array<double, 3>& v) {
  for (double c : v)
    if (!(c > 0)) throw std::domain_error("coordinates must be positive");
}

}  // namespace

std::array<QF13, 3> mu_field_exact(const std::array<QF13, 3>& mu) {
  auto ric = ricci_closed(mu);
  return {QF13(-2) * ric[0], QF13(-2) * ric[1], QF13(-2) * ric[2]};
}

std::array<double, 3> mu_field(const std::array<double, 3>& mu) {
  require_positive(mu);
  const double s13 = std::sqrt(13.0);
  double r2 = (s13 - 2) * mu[0] / mu[1];
  double r3 = (s13 + 2) * mu[0] / mu[2];
  double ric1 = (r2 * r2 + r3 * r3) / 136;
  double ric2 = 0.5 - (s13 - 2) * r2 / 136;
  double ric3 = 0.5 - (s13 + 2) * r3 / 136;
  return {-2 * ric1, -2 * ric2, -2 * ric3};
}

std::array<QF13, 3> mu_to_xyz(const std::array<QF13, 3>& mu) {
  require_positive(mu);
  return {kAlpha * mu[0] / (QF13(17) * mu[1]), kBeta * mu[0] / (QF13(17) * mu[2]),
          mu[0] / QF13(17)};
}

std::array<QF13, 3> xyz_to_mu(const std::array<QF13, 3>& s) {
  require_positive(s);
  return {QF13(17) * s[2], kAlpha * s[2] / s[0], kBeta * s[2] / s[1]};
}

std::array<double, 3> mu_to_xyz(const std::array<double, 3>& mu) {
  require_positive(mu);
  const double s13 = std::sqrt(13.0);
  return {(s13 - 2) * mu[0] / (17 * mu[1]), (s13 + 2) * mu[0] / (17 * mu[2]), mu[0] / 17};
}

std::array<double, 3> xyz_to_mu(const std::array<double, 3>& s) {
  require_positive(s);
  const double s13 = std::sqrt(13.0);
  return {17 * s[2], (s13 - 2) * s[2] / s[0], (s13 + 2) * s[2] / s[1]};
}

const std::array<PolyQ, 3>& poly_field() {
  static const std::array<PolyQ, 3> field = [] {
    PolyQ x = PolyQ::var(0), y = PolyQ::var(1), z = PolyQ::var(2);
    QF13 half = qf(1, 2), quarter = qf(1, 4);
    PolyQ px = x * (x * x * (-half) + x * kAlpha.inverse() - y * y * quarter);
    PolyQ py = y * (x * x * (-quarter) + y * kBeta.inverse() - y * y * half);
    PolyQ pz = (z * (-quarter)) * (x * x + y * y);
    return std::array<PolyQ, 3>{px, py, pz};
  }();
  return field;
}

std::array<double, 3> eval_field(const std::array<PolyQ, 3>& field,
                                 const std::array<double, 3>& p) {
  std::array<double, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = field[i].eval<double>(p[0], p[1], p[2]);
  return out;
}

Eigen::Matrix3d jacobian_at(const std::array<PolyQ, 3>& field,
                            const std::array<double, 3>& p) {
  Eigen::Matrix3d j;
  for (int i = 0; i < 3; ++i)
    for (int v = 0; v < 3; ++v)
      j(i, v) = field[i].derivative(v).eval<double>(p[0], p[1], p[2]);
  return j;
}

std::array<std::complex<double>, 3> cubic_eigenvalues(const Eigen::Matrix3d& j) {
  // Characteristic polynomial l^3 - tr l^2 + m l - det.
  double tr = j.trace();
  double m = j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0) + j(0, 0) * j(2, 2) -
             j(0, 2) * j(2, 0) + j(1, 1) * j(2, 2) - j(1, 2) * j(2, 1);
  double det = j.determinant();
  // Monic cubic x^3 + a x^2 + b x + c.
  double a = -tr, b = m, c = -det;
  std::complex<double> d0(a * a - 3 * b, 0);
  std::complex<double> d1(2 * a * a * a - 9 * a * b + 27 * c, 0);
  std::array<std::complex<double>, 3> roots;
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1.0});
  if (std::abs(d0) < 1e-14 * scale * scale && std::abs(d1) < 1e-14 * scale * scale * scale) {
    roots.fill(std::complex<double>(-a / 3, 0));
  } else {
    std::complex<double> inner = std::sqrt(d1 * d1 - 4.0 * d0 * d0 * d0);
    std::complex<double> base = (d1 + inner) / 2.0;
    if (std::abs(base) < 1e-30) base = (d1 - inner) / 2.0;
    std::complex<double> cc = std::pow(base, 1.0 / 3.0);
    const std::complex<double> zeta(-0.5, std::sqrt(3.0) / 2);
    for (int k = 0; k < 3; ++k) {
      std::complex<double> ck = cc;
      for (int i = 0; i < k; ++i) ck *= zeta;
      roots[k] = -(a + ck + d0 / ck) / 3.0;
    }
  }
  // Near-double real roots lose half the digits in the radicals above; a
  // double root is also a root of the derivative quadratic, so recover it
  // from there and the simple root from the trace relation.
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) {
      if (std::abs(roots[p] - roots[q]) > 1e-5 * scale) continue;
      double disc = a * a - 3 * b;
      if (disc < 0) continue;
      double r1 = (-a - std::sqrt(disc)) / 3, r2 = (-a + std::sqrt(disc)) / 3;
      double mid = roots[p].real();
      double dbl = std::abs(r1 - mid) < std::abs(r2 - mid) ? r1 : r2;
      roots[p] = roots[q] = std::complex<double>(dbl, 0);
      roots[3 - p - q] = std::complex<double>(-a - 2 * dbl, 0);
    }
  for (auto& r : roots)
    if (std::abs(r.imag()) < 1e-8 * std::max(1.0, std::abs(r.real())))
      r = std::complex<double>(r.real(), 0);
  // A real cubic has its complex roots in a conjugate pair; tiny asymmetry
  // left by the radicals would make the sort order platform dependent.
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) {
      if (roots[p].imag() == 0 || roots[q].imag() == 0) continue;
      double re = (roots[p].real() + roots[q].real()) / 2;
      double im = (std::abs(roots[p].imag()) + std::abs(roots[q].imag())) / 2;
      roots[p] = std::complex<double>(re, -im);
      roots[q] = std::complex<double>(re, im);
    }
  std::sort(roots.begin(), roots.end(), [](const auto& p, const auto& q) {
    if (p.real() != q.real()) return p.real() < q.real();
    return p.imag() < q.imag();
  });
  return roots;
}

std::string classify_eigenvalues(const std::array<std::complex<double>, 3>& ev) {
  const double tol = 1e-9;
  int neg = 0, pos = 0, zero = 0;
  for (const auto& l : ev) {
    if (std::abs(l.real()) < tol)
      ++zero;
    else if (l.real() < 0)
      ++neg;
    else
      ++pos;
  }
  if (zero > 0) return "nonhyperbolic";
  if (neg == 3) return "attractor";
  if (pos == 3) return "source";
  return "saddle";
}

namespace {

// Numeric null space of a 3x3 matrix (basis vectors), tolerance-based.
std::vector<std::array<std::complex<double>, 3>> null_space(Eigen::Matrix3cd m) {
  const double tol = 1e-8 * std::max(1.0, m.cwiseAbs().maxCoeff());
  int rank = 0;
  std::array<int, 3> pivot_col{-1, -1, -1};
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int best = -1;
    double best_abs = tol;
    for (int r = rank; r < 3; ++r)
      if (std::abs(m(r, col)) > best_abs) {
        best = r;
        best_abs = std::abs(m(r, col));
      }
    if (best < 0) continue;
    m.row(best).swap(m.row(rank));
    for (int r = 0; r < 3; ++r) {
      if (r == rank) continue;
      m.row(r) -= (m(r, col) / m(rank, col)) * m.row(rank);
    }
    pivot_col[rank] = col;
    ++rank;
  }
  std::vector<std::array<std::complex<double>, 3>> basis;
  for (int col = 0; col < 3; ++col) {
    bool is_pivot = false;
    for (int r = 0; r < rank; ++r) is_pivot |= pivot_col[r] == col;
    if (is_pivot) continue;
    Eigen::Vector3cd v = Eigen::Vector3cd::Zero();
    v(col) = 1;
    for (int r = 0; r < rank; ++r) v(pivot_col[r]) = -m(r, col) / m(r, pivot_col[r]);
    v.normalize();
    basis.push_back({v(0), v(1), v(2)});
  }
  return basis;
}

}  // namespace

Equilibrium linearize(const std::array<PolyQ, 3>& field, const std::array<double, 3>& point,
                      const std::string& name) {
  auto r = eval_field(field, point);
  double res = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (res > 1e-10) throw std::domain_error("point is not an equilibrium of the field");
  Equilibrium eq;
  eq.name = name;
  eq.point = point;
  Eigen::Matrix3d j = jacobian_at(field, point);
  eq.eigenvalues = cubic_eigenvalues(j);
  eq.classification = classify_eigenvalues(eq.eigenvalues);
  Eigen::Matrix3cd jc = j.cast<std::complex<double>>();
  for (int k = 0; k < 3; ++k) {
    if (k > 0 && std::abs(eq.eigenvalues[k] - eq.eigenvalues[k - 1]) < 1e-9) continue;
    Eigen::Matrix3cd shifted = jc;
    for (int i = 0; i < 3; ++i) shifted(i, i) -= eq.eigenvalues[k];
    for (auto& v : null_space(shifted)) eq.eigenvectors.push_back(v);
  }
  return eq;
}

std::vector<Equilibrium> finite_equilibria() {
  const auto& field = poly_field();
  double alpha = kAlpha.to_double(), beta = kBeta.to_double();
  std::vector<Equilibrium> out;
  out.push_back(linearize(field, {2 / alpha, 0, 0}, "q1"));
  out.push_back(linearize(field, {0, 2 / beta, 0}, "q2"));

  // q3: Newton iteration on the planar factor system.
  double x = 0.05, y = 0.35;
  bool converged = false;
  for (int it = 0; it < 50; ++it) {
    double f1 = -0.5 * x * x + x / alpha - 0.25 * y * y;
    double f2 = -0.25 * x * x + y / beta - 0.5 * y * y;
    double j11 = -x + 1 / alpha, j12 = -0.5 * y;
    double j21 = -0.5 * x, j22 = 1 / beta - y;
    double det = j11 * j22 - j12 * j21;
    if (det == 0) break;
    double dx = (f1 * j22 - f2 * j12) / det;
    double dy = (j11 * f2 - j21 * f1) / det;
    x -= dx;
    y -= dy;
    if (std::abs(dx) < 1e-12 && std::abs(dy) < 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("Newton iteration did not converge");
  out.push_back(linearize(field, {x, y, 0}, "q3"));

  Equilibrium q4 = linearize(field, {0, 0, 1}, "q4");
  q4.family = true;
  q4.note = "z-axis family (0,0,z), z > 0; Jacobian identically zero";
  out.push_back(q4);
  return out;
}

CollapseReport collapse_diagnostics(const Trajectory& traj, double threshold) {
  if (traj.points.empty()) throw std::invalid_argument("empty trajectory");
  CollapseReport rep;
  rep.initial = traj.points.front().y;
  rep.terminal = traj.points.back().y;
  for (int i = 0; i < 3; ++i) {
    rep.monotone_decreasing[i] = true;
    for (std::size_t k = 1; k < traj.points.size(); ++k)
      if (traj.points[k].y[i] > traj.points[k - 1].y[i]) rep.monotone_decreasing[i] = false;
    rep.collapsed[i] = rep.terminal[i] < threshold * rep.initial[i];
  }
  // z = mu1/17 must strictly decrease.
  rep.z_strictly_decreasing = true;
  for (std::size_t k = 1; k < traj.points.size(); ++k)
    if (traj.points[k].y[0] >= traj.points[k - 1].y[0]) rep.z_strictly_decreasing = false;

  // Near a finite-time collapse the final sample can sit a hair below zero
  // and its coordinate ratios are meaningless; classify the omega-limit from
  // the last sample that is safely inside the open octant.
  std::array<double, 3> term = rep.terminal;
  for (std::size_t k = traj.points.size(); k-- > 0;) {
    const auto& y = traj.points[k].y;
    if (y[0] > 1e-12 && y[1] > 1e-12 && y[2] > 1e-12) {
      term = y;
      break;
    }
  }
  for (double& c : term)
    if (!(c > 1e-300)) c = 1e-300;
  rep.xyz_terminal = mu_to_xyz(term);
  double alpha = kAlpha.to_double(), beta = kBeta.to_double();
  auto dist2 = [&](double a, double b) {
    double dx = rep.xyz_terminal[0] - a, dy = rep.xyz_terminal[1] - b;
    return dx * dx + dy * dy;
  };
  const double q3x = 0.0521831, q3y = 0.352931;
  double d1 = dist2(2 / alpha, 0), d2 = dist2(0, 2 / beta), d3 = dist2(q3x, q3y);
  double best = std::min({d1, d2, d3});
  if (best > 0.05 * 0.05)
    rep.omega_limit = "unknown";
  else
    rep.omega_limit = best == d1 ? "q1" : (best == d2 ? "q2" : "q3");
  return rep;
}

}  // namespace g2flag
