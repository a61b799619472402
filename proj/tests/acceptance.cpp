// Acceptance checklist: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Each check is self-contained and uses fixed seeds so the
// run is reproducible.
#include "g2flag/charts.hpp"
#include "g2flag/darboux.hpp"
#include "g2flag/flow.hpp"
#include "g2flag/metrics.hpp"
#include "g2flag/reference.hpp"
#include "g2flag/ricci.hpp"
#include "g2flag/rng.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

using namespace g2flag;

namespace {

bool kvec_is_zero(const KVec& v) {
  for (int i = 0; i < 6; ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

const QF13 kAlpha = QF13::sqrt13() - QF13(2);
const QF13 kBeta = QF13::sqrt13() + QF13(2);

// --- criterion 1: exact algebra -------------------------------------------

bool criterion_algebra() {
  auto basis = standard_basis();
  if (basis.size() != 14) return false;
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        G2Element j = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) +
                      bracket(bracket(c, a), b);
        if (!j.is_zero()) return false;
      }
  const auto& k = CompactAlgebra::get();
  auto rels_xy = reference_brackets_xy();
  auto rels_wz = reference_brackets_wz();
  if (rels_xy.size() != 12 || rels_wz.size() != 12) return false;
  for (const auto& r : rels_xy)
    if (k.bracket_table_xy(r.i, r.j) != r.expected) return false;
  for (const auto& r : rels_wz) {
    KVec ei = KVec::Zero(), ej = KVec::Zero();
    ei(r.i) = QF13(1);
    ej(r.j) = QF13(1);
    if (k.bracket_wz(ei, ej) != r.expected) return false;
  }
  return k.killing_gram() == reference_killing_xy();
}

// --- criterion 2: isotropy decompositions ---------------------------------

bool criterion_flags() {
  auto dims = [](FlagId id) {
    std::vector<int> d;
    for (const auto& m : flag_data(id).modules) d.push_back(static_cast<int>(m.gens.size()));
    return d;
  };
  if (dims(FlagId::Empty) != std::vector<int>{1, 1, 1, 1, 1, 1}) return false;
  if (dims(FlagId::Alpha1) != std::vector<int>{1, 2, 2}) return false;
  if (dims(FlagId::Alpha2) != std::vector<int>{1, 2, 2}) return false;
  for (FlagId id : {FlagId::Empty, FlagId::Alpha1, FlagId::Alpha2}) {
    auto f = flag_data(id);
    if (!module_invariance_check(f) || !equivariance_check(f)) return false;
  }
  return true;
}

// --- criterion 3: geodesic-orbit metrics ----------------------------------

MetricParams random_metric(FlagId id, SmallRationalRng& rng) {
  for (;;) {
    MetricParams p;
    p.id = id;
    int nmu = id == FlagId::Empty ? 6 : 3;
    int na = id == FlagId::Empty ? 3 : (id == FlagId::Alpha1 ? 1 : 0);
    for (int i = 0; i < nmu; ++i) p.mu.push_back(rng.next_positive_rational());
    for (int i = 0; i < na; ++i) p.a.push_back(rng.next_rational(3, 5));
    if (metric_is_valid(p).ok) return p;
  }
}

MetricParams random_go_metric(FlagId id, SmallRationalRng& rng) {
  MetricParams p;
  p.id = id;
  switch (id) {
    case FlagId::Empty: {
      QF13 m = rng.next_positive_rational();
      p.mu.assign(6, m);
      QF13 a = m * QF13(Rational(rng.next_int(-3, 3), 5));
      p.a = {a, -a, a};
      break;
    }
    case FlagId::Alpha1: {
      QF13 m2 = rng.next_positive_rational();
      QF13 a = m2 * QF13(Rational(rng.next_int(-4, 4), 5));
      p.mu = {m2 - a * a / m2, m2, m2};
      p.a = {a};
      break;
    }
    case FlagId::Alpha2: {
      QF13 m2 = rng.next_positive_rational();
      QF13 m3 = rng.next_positive_rational();
      QF13 plus = kBeta * kBeta, minus = kAlpha * kAlpha;
      p.mu = {QF13(34) * m2 * m3 / (plus * m2 + minus * m3), m2, m3};
      break;
    }
  }
  return p;
}

bool go_oracle(const MetricParams& p, const FlagData& f, SmallRationalRng& rng) {
  int n = f.tangent_dim();
  auto probe = [&](const DynVecQ& x) { return go_witness(p, f, x).has_value(); };
  for (int i = 0; i < n; ++i) {
    DynVecQ x = DynVecQ::Zero(n);
    x(i) = QF13(1);
    if (!probe(x)) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      DynVecQ x = DynVecQ::Zero(n);
      x(i) = QF13(1);
      x(j) = QF13(1);
      if (!probe(x)) return false;
    }
  for (int trial = 0; trial < 5; ++trial) {
    DynVecQ x(n);
    for (int i = 0; i < n; ++i) x(i) = rng.next_rational();
    if (!probe(x)) return false;
  }
  return true;
}

bool criterion_go() {
  SmallRationalRng rng(0xAC3);
  for (FlagId id : {FlagId::Empty, FlagId::Alpha1, FlagId::Alpha2}) {
    auto f = flag_data(id);
    for (int trial = 0; trial < 200; ++trial) {
      MetricParams p = trial % 4 == 0 ? random_go_metric(id, rng) : random_metric(id, rng);
      if (is_go_closed_form(p) != go_oracle(p, f, rng)) return false;
    }
  }
  // Witness coefficient on the flag with one-dimensional isotropy.
  auto f = flag_data(FlagId::Alpha2);
  const auto& k = CompactAlgebra::get();
  QF13 plus = kBeta * kBeta, minus = kAlpha * kAlpha;
  for (int trial = 0; trial < 50; ++trial) {
    MetricParams p = random_go_metric(FlagId::Alpha2, rng);
    DynVecQ x(5);
    for (int i = 0; i < 5; ++i) x(i) = rng.next_rational();
    auto lambda = go_witness_coefficient(p, f, x);
    if (!lambda) return false;
    QF13 expected = QF13(9) * x(0) * (p.mu[1] - p.mu[2]) / (plus * p.mu[1] + minus * p.mu[2]);
    if (*lambda != expected) return false;
    KVec z = f.isotropy[0] * *lambda;
    KVec xw = f.from_tangent_coords(x);
    KVec ax = f.from_tangent_coords(metric_matrix(p) * x);
    if (!kvec_is_zero(k.bracket_wz(z + xw, ax))) return false;
  }
  return true;
}

// --- criterion 4: equigeodesic vectors ------------------------------------

bool criterion_equigeodesic() {
  SmallRationalRng rng(0xE4);
  for (FlagId id : {FlagId::Empty, FlagId::Alpha1, FlagId::Alpha2}) {
    auto f = flag_data(id);
    int n = f.tangent_dim();
    for (int trial = 0; trial < 1000; ++trial) {
      DynVecQ x(n);
      for (int i = 0; i < n; ++i)
        x(i) = rng.next_int(0, 2) == 0 ? QF13(0) : rng.next_rational();
      if (is_equigeodesic_closed_form(f, x) != equigeodesic_oracle(f, x)) return false;
    }
  }
  return true;
}

// --- criterion 5: Ricci components ----------------------------------------

bool criterion_ricci() {
  SmallRationalRng rng(0x51C);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<QF13, 3> mu = {rng.next_positive_rational(), rng.next_positive_rational(),
                              rng.next_positive_rational()};
    auto a = ricci_closed(mu);
    auto b = ricci_besse(mu);
    for (int i = 0; i < 3; ++i)
      if (a[i] != b[i]) return false;
  }
  // U(x, y) must vanish exactly on every same-module pair of generators (the
  // values entering the Ricci diagonal), and on all pairs for equal
  // parameters; cross-module pairs are nonzero for generic parameters and are
  // absorbed by the curvature formula, which carries no U term.
  auto f = flag_data(FlagId::Alpha2);
  int n = f.tangent_dim();
  auto u_zero = [&](const MetricParams& p, int i, int j) {
    DynVecQ x = DynVecQ::Zero(n), y = DynVecQ::Zero(n);
    x(i) = QF13(1);
    y(j) = QF13(1);
    DynVecQ u = u_bilinear(f, p, x, y);
    for (int kk = 0; kk < u.size(); ++kk)
      if (!u(kk).is_zero()) return false;
    return true;
  };
  for (int trial = 0; trial < 5; ++trial) {
    MetricParams p;
    p.id = FlagId::Alpha2;
    p.mu = {rng.next_positive_rational(), rng.next_positive_rational(),
            rng.next_positive_rational()};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (f.module_of(i) == f.module_of(j) && !u_zero(p, i, j)) return false;
  }
  MetricParams normal;
  normal.id = FlagId::Alpha2;
  normal.mu = {qf(3, 2), qf(3, 2), qf(3, 2)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!u_zero(normal, i, j)) return false;
  return true;
}

// --- criterion 6: finite equilibria ----------------------------------------

bool criterion_equilibria() {
  auto eqs = finite_equilibria();
  if (eqs.size() != 4) return false;
  double alpha = kAlpha.to_double(), beta = kBeta.to_double();
  const auto& q1 = eqs[0];
  if (std::abs(q1.point[0] - 2 / alpha) > 1e-12) return false;
  if (std::abs(q1.eigenvalues[0].real() + 2 / (alpha * alpha)) > 1e-10) return false;
  if (std::abs(q1.eigenvalues[1].real() + 1 / (alpha * alpha)) > 1e-10) return false;
  if (std::abs(q1.eigenvalues[2].real() + 1 / (alpha * alpha)) > 1e-10) return false;
  const auto& q2 = eqs[1];
  if (std::abs(q2.point[1] - 2 / beta) > 1e-12) return false;
  const auto& q3 = eqs[2];
  if (std::abs(q3.point[0] - 0.0521831) > 5e-6) return false;
  if (std::abs(q3.point[1] - 0.352931) > 5e-6) return false;
  if (std::abs(q3.eigenvalues[0].real() + 0.0625182) > 1e-4) return false;
  if (std::abs(q3.eigenvalues[1].real() + 0.0318209) > 1e-4) return false;
  if (std::abs(q3.eigenvalues[2].real() - 0.0306973) > 1e-4) return false;
  return q3.classification == "saddle";
}

// --- criterion 7: invariant surfaces ----------------------------------------

bool criterion_darboux() {
  const auto& field = poly_field();
  std::vector<DarbouxPair> found;
  try {
    // A normal return of the search certifies completeness up to degree 2.
    found = darboux_search(field, 2);
  } catch (const std::exception&) {
    return false;
  }
  auto expected = reference_darboux_pairs();
  if (found.size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (const auto& f : found) {
    if (!darboux_verify(f, field)) return false;
    bool matched = false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (used[i] || !(f.f == expected[i].f) || !(f.k == expected[i].k)) continue;
      used[i] = true;
      matched = true;
      break;
    }
    if (!matched) return false;
  }
  int deg2 = 0, deg1 = 0;
  for (const auto& f : found) {
    if (f.f.total_degree() == 2) ++deg2;
    if (f.f.total_degree() == 1) ++deg1;
  }
  return deg2 == 6 && deg1 == 3;
}

// --- criterion 8: charts -----------------------------------------------------

bool criterion_charts() {
  for (ChartId id : {ChartId::Kappa1, ChartId::U1, ChartId::U2, ChartId::U3}) {
    const auto& derived = chart_field(id);
    auto expected = reference_chart_system(id);
    for (int i = 0; i < 3; ++i)
      if (!(derived[i] == expected[i])) return false;
  }
  double beta = kBeta.to_double();
  auto k1 = chart_equilibria(ChartId::Kappa1);
  if (k1.size() != 2) return false;
  if (std::abs(k1[0].eigenvalues[0]) > 1e-10) return false;
  if (std::abs(k1[0].eigenvalues[1].real() - 1 / beta) > 1e-10) return false;
  if (std::abs(k1[0].eigenvalues[2].real() - 1 / beta) > 1e-10) return false;
  if (std::abs(k1[1].eigenvalues[0].real() + 1 / beta) > 1e-10) return false;
  if (std::abs(k1[1].eigenvalues[1]) > 1e-10) return false;
  if (std::abs(k1[1].eigenvalues[2].real() - 1 / beta) > 1e-10) return false;
  for (ChartId id : {ChartId::U1, ChartId::U2}) {
    auto eqs = chart_equilibria(id);
    if (eqs.size() != 3) return false;
    for (int k = 0; k < 2; ++k) {
      if (std::abs(eqs[k].eigenvalues[0].real() + 0.5) > 1e-10) return false;
      if (std::abs(eqs[k].eigenvalues[1].real() - 0.25) > 1e-10) return false;
      if (std::abs(eqs[k].eigenvalues[2].real() - 0.75) > 1e-10) return false;
    }
    if (std::abs(eqs[2].eigenvalues[0].real() - 0.25) > 1e-10) return false;
    if (std::abs(eqs[2].eigenvalues[1].real() - 0.25) > 1e-10) return false;
    if (std::abs(eqs[2].eigenvalues[2].real() - 0.5) > 1e-10) return false;
  }
  return true;
}

// --- criterion 9: collapse behavior ----------------------------------------

bool criterion_collapse() {
  SmallRationalRng rng(0xC0117);
  IntegrateOptions opt;
  opt.samples = 400;
  opt.positivity_guard = true;
  auto rhs = [](double, const std::array<double, 3>& mu) {
    std::array<double, 3> c = mu;
    for (double& v : c)
      if (!(v > 1e-100)) v = 1e-100;
    return mu_field(c);
  };
  auto xyz_rhs = [](double, const std::array<double, 3>& s) {
    return eval_field(poly_field(), s);
  };
  IntegrateOptions xopt;
  xopt.samples = 20;
  double alpha = kAlpha.to_double(), beta = kBeta.to_double();
  for (int trial = 0; trial < 20; ++trial) {
    std::array<double, 3> mu0 = {rng.next_double(0.3, 3.0), rng.next_double(0.3, 3.0),
                                 rng.next_double(0.3, 3.0)};
    // The parameter flow itself: the first coordinate (hence z) must strictly
    // decrease all the way to the finite-time extinction.
    auto traj = integrate_ode(rhs, mu0, 0, 60, opt);
    auto rep = collapse_diagnostics(traj);
    if (!rep.z_strictly_decreasing) return false;
    // The omega-limit lives in the rescaled frame, whose time is complete;
    // classify it from a long run of the polynomial system.
    auto xtraj = integrate_ode(xyz_rhs, mu_to_xyz(mu0), 0, 400, xopt);
    if (!xtraj.completed) return false;
    auto s = xtraj.points.back().y;
    auto dist = [&](double a, double b) {
      return std::hypot(s[0] - a, s[1] - b);
    };
    bool at_q1 = dist(2 / alpha, 0) < 1e-3;
    bool at_q2 = dist(0, 2 / beta) < 1e-3;
    bool near_q3 = dist(0.0521831, 0.352931) < 5e-2;
    if (!at_q1 && !at_q2 && !near_q3) return false;
    // In the basin of the first axis point both collapsing parameters must
    // fall below 1e-3 of their initial values.
    if (at_q1 && !(rep.collapsed[0] && rep.collapsed[1])) return false;
  }
  return true;
}

// --- criterion 10: documentation statement ----------------------------------

bool criterion_figures() {
  std::puts(
      "note: plotted phase portraits are not reproduced as images; their "
      "quantitative content (equilibria, eigen-data, invariant surfaces, "
      "collapse behavior) is covered by criteria 6-9");
  return true;
}

}  // namespace

int main() {
  struct Item {
    const char* label;
    std::function<bool()> run;
  };
  const Item items[] = {
      {"criterion 1 (exact algebra tables)", criterion_algebra},
      {"criterion 2 (isotropy decompositions)", criterion_flags},
      {"criterion 3 (geodesic-orbit classification)", criterion_go},
      {"criterion 4 (equigeodesic classification)", criterion_equigeodesic},
      {"criterion 5 (Ricci cross-check)", criterion_ricci},
      {"criterion 6 (finite equilibria)", criterion_equilibria},
      {"criterion 7 (invariant-surface search)", criterion_darboux},
      {"criterion 8 (chart systems)", criterion_charts},
      {"criterion 9 (collapse behavior)", criterion_collapse},
      {"criterion 10 (figure substitution)", criterion_figures},
  };
  int failures = 0;
  for (const auto& item : items) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = item.run();
    } catch (const std::exception& e) {
      std::printf("%s: exception: %s\n", item.label, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s: %s (%.2fs)\n", item.label, ok ? "pass" : "FAIL", secs);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
