#include "g2flag/darboux.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace g2flag {

namespace {

// Largest number of undetermined coefficients: a degree-2 candidate has the
// 9 graded-lex-smaller monomials of degree <= 2 below its leading one.
constexpr int kMaxUnknowns = 9;

// ---------------------------------------------------------------------------
// Sparse polynomial in the unknown coefficients (the elimination scalar ring).
// Models the coefficient-ring concept Poly3 expects: +, -, *, is_zero(),
// construction from integers.

struct MPoly {
  using Expo = std::array<int, kMaxUnknowns>;
  std::map<Expo, QF13> terms;

  MPoly() = default;
  MPoly(long v) : MPoly(QF13(v)) {}  // NOLINT(google-explicit-constructor)
  MPoly(QF13 c) {                    // NOLINT(google-explicit-constructor)
    add(Expo{}, std::move(c));
  }
  static MPoly variable(int v) {
    MPoly p;
    Expo e{};
    e[v] = 1;
    p.add(e, QF13(1));
    return p;
  }

  void add(const Expo& e, const QF13& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && terms.begin()->first == Expo{};
  }
  QF13 const_value() const {
    return terms.empty() ? QF13(0) : terms.begin()->second;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms) add(e, c);
    return *this;
  }
  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
  }
  MPoly operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add(e, -c);
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        Expo e = e1;
        for (int i = 0; i < kMaxUnknowns; ++i) e[i] += e2[i];
        r.add(e, c1 * c2);
      }
    return r;
  }
  MPoly operator-() const { return MPoly() - *this; }

  int degree_in(int v) const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[v]);
    return d;
  }
  std::set<int> vars_present() const {
    std::set<int> s;
    for (const auto& [e, c] : terms)
      for (int i = 0; i < kMaxUnknowns; ++i)
        if (e[i] > 0) s.insert(i);
    return s;
  }
  /// Coefficient of v^p, an MPoly in the remaining unknowns.
  MPoly coeff_of(int v, int p) const {
    MPoly r;
    for (const auto& [e, c] : terms)
      if (e[v] == p) {
        Expo ee = e;
        ee[v] = 0;
        r.add(ee, c);
      }
    return r;
  }
  MPoly substitute(int v, const MPoly& value) const {
    MPoly r;
    for (const auto& [e, c] : terms) {
      Expo ee = e;
      int p = ee[v];
      ee[v] = 0;
      MPoly t;
      t.add(ee, c);
      for (int i = 0; i < p; ++i) t = t * value;
      r += t;
    }
    return r;
  }
  bool divisible_by(int v) const {
    if (terms.empty()) return false;
    for (const auto& [e, c] : terms)
      if (e[v] == 0) return false;
    return true;
  }
  MPoly divide_once(int v) const {
    MPoly r;
    for (const auto& [e, c] : terms) {
      Expo ee = e;
      --ee[v];
      r.add(ee, c);
    }
    return r;
  }
};

// ---------------------------------------------------------------------------
// Exact solver for the remainder systems.  Handles the equation shapes these
// systems produce and throws on anything else, so a normal return certifies
// that the full solution set over the scalar field was enumerated.

using Assignment = std::vector<std::pair<int, MPoly>>;
using Solution = std::vector<QF13>;

std::vector<QF13> quadratic_roots(const QF13& c2, const QF13& c1, const QF13& c0) {
  if (c2.is_zero()) {
    if (c1.is_zero()) throw std::logic_error("degenerate univariate equation");
    return {-c0 / c1};
  }
  QF13 disc = c1 * c1 - QF13(4) * c2 * c0;
  if (disc.sign() < 0) return {};
  auto s = disc.sqrt_exact();
  // When the discriminant is not a square the roots lie outside the scalar
  // field, so within the field there is no solution.
  if (!s) return {};
  QF13 r1 = (-c1 + *s) / (QF13(2) * c2);
  QF13 r2 = (-c1 - *s) / (QF13(2) * c2);
  if (r1 == r2) return {r1};
  return {r1, r2};
}

void solve_system(std::vector<MPoly> eqs, Assignment partial,
                  std::vector<Assignment>& out, int depth) {
  if (depth > 64) throw std::logic_error("solver recursion limit exceeded");
  std::vector<MPoly> live;
  for (auto& e : eqs) {
    if (e.is_zero()) continue;
    if (e.is_constant()) return;  // nonzero constant: inconsistent branch
    live.push_back(std::move(e));
  }
  if (live.empty()) {
    out.push_back(std::move(partial));
    return;
  }

  auto substitute_all = [&](int v, const MPoly& value) {
    std::vector<MPoly> next;
    next.reserve(live.size());
    for (const auto& e : live) next.push_back(e.substitute(v, value));
    Assignment p = partial;
    p.emplace_back(v, value);
    solve_system(std::move(next), std::move(p), out, depth + 1);
  };

  // 1) An equation linear in some unknown with constant leading coefficient:
  //    eliminate that unknown.
  for (const auto& e : live) {
    for (int v : e.vars_present()) {
      if (e.degree_in(v) != 1) continue;
      MPoly lead = e.coeff_of(v, 1);
      if (!lead.is_constant()) continue;
      MPoly rest = e.coeff_of(v, 0);
      substitute_all(v, rest * MPoly(-lead.const_value().inverse()));
      return;
    }
  }

  // 2) A univariate equation of degree <= 2: exact roots, branch on each.
  for (const auto& e : live) {
    auto vars = e.vars_present();
    if (vars.size() != 1) continue;
    int v = *vars.begin();
    // Degree > 2 falls through to the common-factor branch below.
    if (e.degree_in(v) > 2) continue;
    QF13 c2 = e.coeff_of(v, 2).const_value();
    QF13 c1 = e.coeff_of(v, 1).const_value();
    QF13 c0 = e.coeff_of(v, 0).const_value();
    for (const QF13& root : quadratic_roots(c2, c1, c0))
      substitute_all(v, MPoly(root));
    return;
  }

  // 3) An equation with a common unknown factor: branch on the factor
  //    vanishing versus the cofactor vanishing.
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (int v : live[i].vars_present()) {
      if (!live[i].divisible_by(v)) continue;
      substitute_all(v, MPoly());
      std::vector<MPoly> next = live;
      next[i] = live[i].divide_once(v);
      solve_system(std::move(next), partial, out, depth + 1);
      return;
    }
  }

  throw std::logic_error("remainder system has an unhandled shape");
}

/// Resolve a chronological substitution list into constants.
Solution resolve(const Assignment& a, int nvars) {
  std::vector<std::optional<QF13>> value(nvars);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    MPoly expr = it->second;
    for (int v = 0; v < nvars; ++v)
      if (value[v]) expr = expr.substitute(v, MPoly(*value[v]));
    if (!expr.is_constant())
      throw std::logic_error("assignment did not resolve to a constant");
    if (value[it->first]) throw std::logic_error("unknown assigned twice");
    value[it->first] = expr.const_value();
  }
  Solution s(nvars);
  for (int v = 0; v < nvars; ++v) {
    if (!value[v])
      throw std::logic_error("unconstrained unknown: solution family detected");
    s[v] = *value[v];
  }
  return s;
}

// ---------------------------------------------------------------------------

using PolyM = Poly3<MPoly>;

PolyM lift(const PolyQ& p) {
  PolyM r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, MPoly(c));
  return r;
}

bool mono_divides(const Mono3& d, const Mono3& m) {
  return m[0] >= d[0] && m[1] >= d[1] && m[2] >= d[2];
}

/// Divide `dividend` by a monic `divisor` with leading monomial `lead`;
/// returns the remainder and accumulates the quotient when requested.
template <class K>
Poly3<K> reduce(Poly3<K> dividend, const Poly3<K>& divisor, const Mono3& lead,
                Poly3<K>* quotient) {
  for (;;) {
    const auto& ts = dividend.terms();
    auto it = ts.begin();
    for (; it != ts.end(); ++it)
      if (mono_divides(lead, it->first)) break;
    if (it == ts.end()) return dividend;
    Mono3 ratio{it->first[0] - lead[0], it->first[1] - lead[1],
                it->first[2] - lead[2]};
    K coeff = it->second;
    dividend = dividend - divisor * Poly3<K>::monomial(ratio[0], ratio[1],
                                                       ratio[2], coeff);
    if (quotient) quotient->add_term(ratio, coeff);
  }
}

std::vector<Mono3> monomials_below(const Mono3& lead) {
  GradedLexGreater gt;
  std::vector<Mono3> out;
  int d = lead[0] + lead[1] + lead[2];
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c) {
        Mono3 m{a, b, c};
        if (gt(lead, m)) out.push_back(m);
      }
  return out;
}

}  // namespace

bool darboux_verify(const DarbouxPair& pair, const std::array<PolyQ, 3>& field) {
  PolyQ lhs;
  for (int v = 0; v < 3; ++v) lhs = lhs + pair.f.derivative(v) * field[v];
  return (lhs - pair.k * pair.f).is_zero();
}

std::vector<DarbouxPair> darboux_search(const std::array<PolyQ, 3>& field,
                                        int max_degree) {
  if (max_degree < 1 || max_degree > 2)
    throw std::invalid_argument("max_degree must be 1 or 2");

  std::vector<Mono3> leads;
  for (int d = 1; d <= max_degree; ++d)
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) leads.push_back({a, b, d - a - b});

  std::array<PolyM, 3> lifted{lift(field[0]), lift(field[1]), lift(field[2])};

  std::vector<DarbouxPair> results;
  std::set<std::vector<std::string>> seen;
  for (const Mono3& lead : leads) {
    std::vector<Mono3> lower = monomials_below(lead);
    int n = static_cast<int>(lower.size());
    if (n > kMaxUnknowns) throw std::logic_error("too many unknown coefficients");

    PolyM f = PolyM::monomial(lead[0], lead[1], lead[2], MPoly(QF13(1)));
    for (int i = 0; i < n; ++i) f.add_term(lower[i], MPoly::variable(i));

    PolyM dividend;
    for (int v = 0; v < 3; ++v)
      dividend = dividend + f.derivative(v) * lifted[v];
    PolyM remainder = reduce(dividend, f, lead, static_cast<PolyM*>(nullptr));

    std::vector<MPoly> eqs;
    for (const auto& [m, c] : remainder.terms()) eqs.push_back(c);

    std::vector<Assignment> raw;
    solve_system(std::move(eqs), {}, raw, 0);

    for (const auto& a : raw) {
      Solution sol = resolve(a, n);
      PolyQ fc = PolyQ::monomial(lead[0], lead[1], lead[2]);
      for (int i = 0; i < n; ++i) fc.add_term(lower[i], sol[i]);

      std::vector<std::string> key;
      for (const auto& [m, c] : fc.terms())
        key.push_back(std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
                      std::to_string(m[2]) + ":" + c.to_string());
      if (!seen.insert(key).second) continue;

      PolyQ dc;
      for (int v = 0; v < 3; ++v) dc = dc + fc.derivative(v) * field[v];
      PolyQ k;
      PolyQ rem = reduce(dc, fc, lead, &k);
      if (!rem.is_zero())
        throw std::logic_error("solved candidate failed the defining identity");
      if (k.total_degree() > 2)
        throw std::logic_error("cofactor degree exceeds the expected bound");
      results.push_back({fc, k});
    }
  }
  return results;
}

}  // namespace g2flag
