#include "g2flag/metrics.hpp"

#include <stdexcept>

namespace g2flag {

namespace {

bool kvec_is_zero(const KVec& v) {
  for (int i = 0; i < 6; ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

void check_sizes(const MetricParams& p) {
  std::size_t want_mu = p.id == FlagId::Empty ? 6 : 3;
  std::size_t want_a = p.id == FlagId::Empty ? 3 : (p.id == FlagId::Alpha1 ? 1 : 0);
  if (p.mu.size() != want_mu || p.a.size() != want_a)
    throw std::invalid_argument("metric parameter count does not match the flag type");
}

}  // namespace

MetricValidity metric_is_valid(const MetricParams& p) {
  check_sizes(p);
  for (std::size_t i = 0; i < p.mu.size(); ++i)
    if (p.mu[i].sign() <= 0)
      return {false, "mu" + std::to_string(i + 1) + " must be positive"};
  auto coupling_ok = [](const QF13& a, const QF13& m1, const QF13& m2) {
    return (a * a) < m1 * m2;
  };
  if (p.id == FlagId::Empty) {
    for (int k = 0; k < 3; ++k)
      if (!coupling_ok(p.a[k], p.mu[2 * k], p.mu[2 * k + 1]))
        return {false, "a" + std::to_string(k + 1) + "^2 must be below mu" +
                           std::to_string(2 * k + 1) + "*mu" + std::to_string(2 * k + 2)};
  } else if (p.id == FlagId::Alpha1) {
    if (!coupling_ok(p.a[0], p.mu[1], p.mu[2]))
      return {false, "a^2 must be below mu2*mu3"};
  }
  return {};
}

DynMatQ metric_matrix(const MetricParams& p) {
  check_sizes(p);
  switch (p.id) {
    case FlagId::Empty: {
      DynMatQ m = DynMatQ::Zero(6, 6);
      for (int k = 0; k < 3; ++k) {
        m(2 * k, 2 * k) = p.mu[2 * k];
        m(2 * k + 1, 2 * k + 1) = p.mu[2 * k + 1];
        m(2 * k, 2 * k + 1) = p.a[k];
        m(2 * k + 1, 2 * k) = p.a[k];
      }
      return m;
    }
    case FlagId::Alpha1: {
      DynMatQ m = DynMatQ::Zero(5, 5);
      m(0, 0) = p.mu[0];
      for (int i : {1, 2}) m(i, i) = p.mu[1];
      for (int i : {3, 4}) m(i, i) = p.mu[2];
      m(1, 3) = m(3, 1) = p.a[0];
      m(2, 4) = m(4, 2) = p.a[0];
      return m;
    }
    case FlagId::Alpha2: {
      DynMatQ m = DynMatQ::Zero(5, 5);
      m(0, 0) = p.mu[0];
      for (int i : {1, 2}) m(i, i) = p.mu[1];
      for (int i : {3, 4}) m(i, i) = p.mu[2];
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

QF13 metric_inner(const FlagData& f, const MetricParams& p, const DynVecQ& x,
                  const DynVecQ& y) {
  DynVecQ mx = metric_matrix(p) * x;
  QF13 r(0);
  for (int i = 0; i < mx.size(); ++i) r += mx(i) * y(i) * f.gen_norm2(i);
  return r;
}

bool is_go_closed_form(const MetricParams& p) {
  check_sizes(p);
  switch (p.id) {
    case FlagId::Empty: {
      for (int i = 1; i < 6; ++i)
        if (p.mu[i] != p.mu[0]) return false;
      return p.a[1] == -p.a[0] && p.a[2] == p.a[0];
    }
    case FlagId::Alpha1: {
      if (p.mu[1] != p.mu[2]) return false;
      return p.a[0] * p.a[0] == p.mu[1] * (p.mu[1] - p.mu[0]);
    }
    case FlagId::Alpha2: {
      QF13 two = QF13(2), s13 = QF13::sqrt13();
      QF13 plus = (two + s13) * (two + s13);
      QF13 minus = (two - s13) * (two - s13);
      return p.mu[0] * (plus * p.mu[1] + minus * p.mu[2]) == QF13(34) * p.mu[1] * p.mu[2];
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<KVec> go_witness(const MetricParams& p, const FlagData& f, const DynVecQ& x) {
  const auto& k = CompactAlgebra::get();
  KVec xw = f.from_tangent_coords(x);
  KVec ax = f.from_tangent_coords(metric_matrix(p) * x);
  KVec rhs6 = k.bracket_wz(xw, ax);
  int n = static_cast<int>(f.isotropy.size());
  if (n == 0) return kvec_is_zero(rhs6) ? std::optional<KVec>(KVec::Zero()) : std::nullopt;
  DynMatQ m(6, n);
  DynVecQ rhs(6);
  for (int j = 0; j < n; ++j) m.col(j) = k.bracket_wz(f.isotropy[j], ax);
  for (int i = 0; i < 6; ++i) rhs(i) = -rhs6(i);
  auto sol = solve_exact(m, rhs);
  if (!sol) return std::nullopt;
  KVec z = KVec::Zero();
  for (int j = 0; j < n; ++j) z += f.isotropy[j] * (*sol)(j);
  return z;
}

std::optional<QF13> go_witness_coefficient(const MetricParams& p, const FlagData& f,
                                           const DynVecQ& x) {
  if (f.isotropy.size() != 1)
    throw std::domain_error("witness coefficient needs one-dimensional isotropy");
  auto z = go_witness(p, f, x);
  if (!z) return std::nullopt;
  const auto& k = CompactAlgebra::get();
  const KVec& g = f.isotropy[0];
  return k.inner_wz(*z, g) / k.inner_wz(g, g);
}

bool is_equigeodesic_closed_form(const FlagData& f, const DynVecQ& x) {
  if (x.size() != f.tangent_dim()) throw std::invalid_argument("coordinate size mismatch");
  switch (f.id) {
    case FlagId::Empty: {
      // Supported inside a single equivalent pair of one-dimensional modules.
      for (int k = 0; k < 3; ++k) {
        bool others_zero = true;
        for (int i = 0; i < 6; ++i)
          if (i / 2 != k && !x(i).is_zero()) others_zero = false;
        if (others_zero) return true;
      }
      return false;
    }
    case FlagId::Alpha1: {
      // Coordinates (z3, w2, w3, z2, -z1).
      bool tail_zero = x(1).is_zero() && x(2).is_zero() && x(3).is_zero() && x(4).is_zero();
      if (tail_zero) return true;
      // z3 = 0 and w2*z1 + w3*z2 = 0 with z1 = -x(4), z2 = x(3).
      return x(0).is_zero() && (x(2) * x(3) - x(1) * x(4)).is_zero();
    }
    case FlagId::Alpha2: {
      if (x(0).is_zero()) return true;
      return x(1).is_zero() && x(2).is_zero() && x(3).is_zero() && x(4).is_zero();
    }
  }
  throw std::logic_error("unreachable");
}

bool equigeodesic_oracle(const FlagData& f, const DynVecQ& x) {
  if (x.size() != f.tangent_dim()) throw std::invalid_argument("coordinate size mismatch");
  const auto& k = CompactAlgebra::get();
  KVec xw = f.from_tangent_coords(x);

  // Module projections of X in wz coordinates.
  int nm = static_cast<int>(f.modules.size());
  std::vector<KVec> proj(nm, KVec::Zero());
  {
    int flat = 0;
    for (int m = 0; m < nm; ++m)
      for (const auto& g : f.modules[m].gens) proj[m] += g * x(flat++);
  }

  auto tangent_bracket_vanishes = [&](const KVec& lx) {
    KVec b = k.bracket_wz(xw, lx);
    return kvec_is_zero(f.project_tangent(b));
  };

  for (int m = 0; m < nm; ++m)
    if (!tangent_bracket_vanishes(proj[m])) return false;

  for (const auto& eq : f.equivalences) {
    const auto& mi = f.modules[eq.i];
    const auto& mj = f.modules[eq.j];
    int n = static_cast<int>(mi.gens.size());
    // Symmetrized coupling: T on module i plus its transpose on module j.
    KVec coupled = KVec::Zero();
    for (int a = 0; a < n; ++a) {
      QF13 ci = k.inner_wz(xw, mi.gens[a]) / mi.norm2;
      for (int b = 0; b < n; ++b) coupled += mj.gens[b] * (eq.map(b, a) * ci);
    }
    for (int b = 0; b < n; ++b) {
      QF13 cj = k.inner_wz(xw, mj.gens[b]) / mj.norm2;
      for (int a = 0; a < n; ++a) coupled += mi.gens[a] * (eq.map(b, a) * cj);
    }
    if (!tangent_bracket_vanishes(coupled)) return false;
  }
  return true;
}

}  // namespace g2flag
