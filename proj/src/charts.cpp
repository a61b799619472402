#include "g2flag/charts.hpp"

#include <cmath>
#include <stdexcept>

namespace g2flag {

namespace {

PolyQ divide_by_var(const PolyQ& p, int var, int power) {
  PolyQ out;
  for (const auto& [m, c] : p.terms()) {
    if (m[var] < power) throw std::logic_error("polynomial not divisible as expected");
    Mono3 mm = m;
    mm[var] -= power;
    out.add_term(mm, c);
  }
  return out;
}

// z3^3 * P(arguments) with the infinity-th variable replaced by 1/z3 and the
// two remaining ones, in order, by z1/z3 and z2/z3.
PolyQ compactify(const PolyQ& p, int infinity) {
  PolyQ out;
  for (const auto& [m, c] : p.terms()) {
    int deg = m[0] + m[1] + m[2];
    if (deg > 3) throw std::logic_error("field degree exceeds compactification budget");
    Mono3 mm{0, 0, 0};
    int slot = 0;
    for (int v = 0; v < 3; ++v) {
      if (v == infinity) continue;
      mm[slot++] = m[v];
    }
    mm[2] = 3 - deg;
    out.add_term(mm, c);
  }
  return out;
}

std::array<PolyQ, 3> derive_kappa1() {
  const auto& p = poly_field();
  // x = r1*x1, y = r1, z = z1 with chart variables (x1, r1, z1).
  PolyQ x1 = PolyQ::var(0), r1 = PolyQ::var(1), z1 = PolyQ::var(2);
  PolyQ sx = r1 * x1, sy = r1, sz = z1;
  PolyQ px = p[0].substitute(sx, sy, sz);
  PolyQ py = p[1].substitute(sx, sy, sz);
  PolyQ pz = p[2].substitute(sx, sy, sz);
  // x1' = (P1 - x1*P2)/r1, then one further division by r1 desingularizes.
  return {divide_by_var(px - x1 * py, 1, 2), divide_by_var(py, 1, 1),
          divide_by_var(pz, 1, 1)};
}

std::array<PolyQ, 3> derive_u(int infinity) {
  const auto& p = poly_field();
  PolyQ q[3] = {compactify(p[0], infinity), compactify(p[1], infinity),
                compactify(p[2], infinity)};
  PolyQ z1 = PolyQ::var(0), z2 = PolyQ::var(1), z3 = PolyQ::var(2);
  const PolyQ& qa = q[infinity];
  std::array<PolyQ, 2> rest;
  int slot = 0;
  for (int v = 0; v < 3; ++v)
    if (v != infinity) rest[slot++] = q[v];
  return {rest[0] - z1 * qa, rest[1] - z2 * qa, -(z3 * qa)};
}

const QF13 kAlpha = QF13::sqrt13() - QF13(2);
const QF13 kBeta = QF13::sqrt13() + QF13(2);

}  // namespace

std::string to_string(ChartId id) {
  switch (id) {
    case ChartId::Kappa1:
      return "kappa1";
    case ChartId::U1:
      return "U1";
    case ChartId::U2:
      return "U2";
    case ChartId::U3:
      return "U3";
  }
  return "?";
}

ChartId chart_from_string(const std::string& s) {
  if (s == "kappa1") return ChartId::Kappa1;
  if (s == "U1" || s == "u1") return ChartId::U1;
  if (s == "U2" || s == "u2") return ChartId::U2;
  if (s == "U3" || s == "u3") return ChartId::U3;
  throw std::invalid_argument("unknown chart '" + s + "'");
}

const std::array<PolyQ, 3>& chart_field(ChartId id) {
  static const std::array<PolyQ, 3> kappa1 = derive_kappa1();
  static const std::array<PolyQ, 3> u1 = derive_u(0);
  static const std::array<PolyQ, 3> u2 = derive_u(1);
  static const std::array<PolyQ, 3> u3 = derive_u(2);
  switch (id) {
    case ChartId::Kappa1:
      return kappa1;
    case ChartId::U1:
      return u1;
    case ChartId::U2:
      return u2;
    case ChartId::U3:
      return u3;
  }
  throw std::logic_error("unreachable");
}

std::vector<Equilibrium> chart_equilibria(ChartId id) {
  const auto& field = chart_field(id);
  std::vector<Equilibrium> out;
  if (id == ChartId::Kappa1) {
    double ab = (kAlpha / kBeta).to_double();
    Equilibrium pp = linearize(field, {ab, 0, 1}, "p+");
    pp.family = true;
    // (F - I/beta)^2 annihilates this direction but F - I/beta does not.
    QF13 third = -(kAlpha * kAlpha + kBeta * kBeta) / (QF13(4) * kBeta);
    pp.eigenvectors.push_back({std::complex<double>(0), std::complex<double>(1),
                               std::complex<double>(third.to_double())});
    pp.note = "z1-axis family at z1* = 1; last listed vector is a generalized "
              "eigenvector for the defective eigenvalue 1/beta";
    out.push_back(pp);

    Equilibrium pm = linearize(field, {0, 0, 1}, "p-");
    pm.family = true;
    pm.note = "z1-axis family at z1* = 1";
    out.push_back(pm);
    return out;
  }
  if (id == ChartId::U3) {
    Equilibrium origin = linearize(field, {0, 0, 0}, "origin");
    origin.note = "linearly zero equilibrium";
    out.push_back(origin);
    return out;
  }
  out.push_back(linearize(field, {1, 0, 0}, "p1"));
  out.push_back(linearize(field, {-1, 0, 0}, "p2"));
  out.push_back(linearize(field, {0, 0, 0}, "p3"));
  return out;
}

std::array<double, 3> disk_projection(const std::array<double, 3>& x) {
  double d = std::sqrt(1 + x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  return {x[0] / d, x[1] / d, x[2] / d};
}

}  // namespace g2flag
