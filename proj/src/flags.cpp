#include "g2flag/flags.hpp"

#include <stdexcept>

namespace g2flag {

namespace {

// wz coordinate indices.
constexpr int W1 = 0, W2 = 1, W3 = 2, Z1 = 3, Z2 = 4, Z3 = 5;

KVec unit(int i, QF13 c = QF13(1)) {
  KVec v = KVec::Zero();
  v(i) = c;
  return v;
}

KVec combo(int i, QF13 ci, int j, QF13 cj) {
  KVec v = KVec::Zero();
  v(i) = ci;
  v(j) = cj;
  return v;
}

using DynMatQ = Eigen::Matrix<QF13, Eigen::Dynamic, Eigen::Dynamic>;

bool kvec_is_zero(const KVec& v) {
  for (int i = 0; i < 6; ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

DynMatQ identity_map(int n) {
  DynMatQ m = DynMatQ::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = QF13(1);
  return m;
}

}  // namespace

int FlagData::tangent_dim() const {
  int d = 0;
  for (const auto& m : modules) d += static_cast<int>(m.gens.size());
  return d;
}

std::vector<KVec> FlagData::tangent_basis() const {
  std::vector<KVec> b;
  for (const auto& m : modules)
    for (const auto& g : m.gens) b.push_back(g);
  return b;
}

int FlagData::module_of(int flat_index) const {
  for (int m = 0; m < static_cast<int>(modules.size()); ++m) {
    if (flat_index < static_cast<int>(modules[m].gens.size())) return m;
    flat_index -= static_cast<int>(modules[m].gens.size());
  }
  throw std::out_of_range("generator index");
}

QF13 FlagData::gen_norm2(int flat_index) const { return modules[module_of(flat_index)].norm2; }

Eigen::Matrix<QF13, Eigen::Dynamic, 1> FlagData::tangent_coords(const KVec& v) const {
  auto basis = tangent_basis();
  Eigen::Matrix<QF13, Eigen::Dynamic, 1> x(basis.size());
  const auto& k = CompactAlgebra::get();
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    x(i) = k.inner_wz(v, basis[i]) / gen_norm2(i);
  if (!kvec_is_zero(from_tangent_coords(x) - v))
    throw std::domain_error("vector is not tangent (has an isotropy component)");
  return x;
}

KVec FlagData::from_tangent_coords(const Eigen::Matrix<QF13, Eigen::Dynamic, 1>& x) const {
  auto basis = tangent_basis();
  if (x.size() != static_cast<int>(basis.size()))
    throw std::invalid_argument("coordinate size mismatch");
  KVec v = KVec::Zero();
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) v += basis[i] * x(i);
  return v;
}

KVec FlagData::project_tangent(const KVec& v) const {
  auto basis = tangent_basis();
  const auto& k = CompactAlgebra::get();
  KVec out = KVec::Zero();
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    out += basis[i] * (k.inner_wz(v, basis[i]) / gen_norm2(i));
  return out;
}

FlagData flag_data(FlagId id) {
  FlagData f;
  f.id = id;
  const QF13 s13 = QF13::sqrt13();
  switch (id) {
    case FlagId::Empty: {
      // Trivial isotropy; six one-dimensional modules ordered to match the
      // block structure of the invariant metrics.
      for (int i : {W1, Z3, W2, Z2, W3, Z1}) f.modules.push_back({{unit(i)}, QF13(1)});
      for (int p : {0, 2, 4})
        f.equivalences.push_back({p, p + 1, identity_map(1)});
      break;
    }
    case FlagId::Alpha1: {
      f.isotropy = {unit(W1)};
      f.modules.push_back({{unit(Z3)}, QF13(1)});
      f.modules.push_back({{unit(W2), unit(W3)}, QF13(1)});
      f.modules.push_back({{unit(Z2), unit(Z1, QF13(-1))}, QF13(1)});
      // W2 -> Z2, W3 -> -Z1: the identity in generator coordinates.
      f.equivalences.push_back({1, 2, identity_map(2)});
      break;
    }
    case FlagId::Alpha2: {
      f.isotropy = {combo(W2, QF13(-2), Z2, s13)};
      f.modules.push_back({{combo(W2, s13, Z2, QF13(2))}, QF13(17)});
      f.modules.push_back({{combo(W1, QF13(1), Z3, QF13(1)), combo(W3, QF13(1), Z1, QF13(1))},
                           QF13(2)});
      f.modules.push_back({{combo(W1, QF13(1), Z3, QF13(-1)), combo(W3, QF13(1), Z1, QF13(-1))},
                           QF13(2)});
      break;
    }
  }
  return f;
}

bool module_invariance_check(const FlagData& f) {
  const auto& k = CompactAlgebra::get();
  for (const auto& iso : f.isotropy) {
    for (const auto& mod : f.modules) {
      for (const auto& g : mod.gens) {
        KVec b = k.bracket_wz(iso, g);
        // Expand in the module's own generators and require an exact match.
        KVec rec = KVec::Zero();
        for (const auto& h : mod.gens) rec += h * (k.inner_wz(b, h) / mod.norm2);
        if (!kvec_is_zero(rec - b)) return false;
      }
    }
  }
  return true;
}

bool equivariance_check(const FlagData& f) {
  const auto& k = CompactAlgebra::get();
  for (const auto& eq : f.equivalences) {
    const auto& mi = f.modules[eq.i];
    const auto& mj = f.modules[eq.j];
    int n = static_cast<int>(mi.gens.size());
    auto apply_map = [&](const KVec& u) {
      KVec out = KVec::Zero();
      for (int a = 0; a < n; ++a) {
        QF13 c = k.inner_wz(u, mi.gens[a]) / mi.norm2;
        for (int b = 0; b < n; ++b) out += mj.gens[b] * (eq.map(b, a) * c);
      }
      return out;
    };
    for (const auto& iso : f.isotropy) {
      for (const auto& g : mi.gens) {
        KVec lhs = apply_map(k.bracket_wz(iso, g));
        KVec rhs = k.bracket_wz(iso, apply_map(g));
        if (!kvec_is_zero(lhs - rhs)) return false;
      }
    }
    // The map must also preserve inner products between generators.
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        QF13 before = k.inner_wz(mi.gens[a], mi.gens[b]);
        QF13 after = k.inner_wz(apply_map(mi.gens[a]), apply_map(mi.gens[b]));
        if (before != after) return false;
      }
  }
  return true;
}

}  // namespace g2flag
