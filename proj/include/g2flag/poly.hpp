#pragma once

#include "g2flag/scalar.hpp"

#include <array>
#include <map>
#include <sstream>
#include <type_traits>
#include <vector>

namespace g2flag {

/// Exponent triple of x^a y^b z^c.
using Mono3 = std::array<int, 3>;

/// Graded lexicographic order, largest first when used as a map comparator.
struct GradedLexGreater {
  bool operator()(const Mono3& p, const Mono3& q) const {
    int dp = p[0] + p[1] + p[2], dq = q[0] + q[1] + q[2];
    if (dp != dq) return dp > dq;
    return p > q;
  }
};

/// Sparse polynomial in three variables over a commutative coefficient ring K.
/// K needs +, -, *, is_zero(); QF13 is the main instantiation.
template <class K>
class Poly3 {
public:
  using Terms = std::map<Mono3, K, GradedLexGreater>;

  Poly3() = default;
  explicit Poly3(K c) { add_term({0, 0, 0}, std::move(c)); }

  static Poly3 monomial(int a, int b, int c, K coeff = K(1)) {
    Poly3 p;
    p.add_term({a, b, c}, std::move(coeff));
    return p;
  }
  static Poly3 var(int i, K coeff = K(1)) {
    Mono3 m{0, 0, 0};
    m[i] = 1;
    Poly3 p;
    p.add_term(m, std::move(coeff));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const {
    if (terms_.empty()) return -1;
    const Mono3& m = terms_.begin()->first;  // graded order: first is largest
    return m[0] + m[1] + m[2];
  }

  void add_term(const Mono3& m, K c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  K coeff(const Mono3& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  Poly3 operator+(const Poly3& o) const {
    Poly3 r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Poly3 operator-(const Poly3& o) const {
    Poly3 r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, K(0) - c);
    return r;
  }
  Poly3 operator-() const { return Poly3() - *this; }
  Poly3 operator*(const Poly3& o) const {
    Poly3 r;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_)
        r.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
    return r;
  }
  Poly3 operator*(const K& c) const {
    Poly3 r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }
  bool operator==(const Poly3& o) const { return (*this - o).is_zero(); }

  Poly3 derivative(int var) const {
    Poly3 r;
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Mono3 mm = m;
      --mm[var];
      r.add_term(mm, c * K(m[var]));
    }
    return r;
  }

  template <class V>
  V eval(const V& x, const V& y, const V& z) const {
    V total = V(0);
    for (const auto& [m, c] : terms_) {
      V t = coeff_cast<V>(c);
      for (int i = 0; i < m[0]; ++i) t = t * x;
      for (int i = 0; i < m[1]; ++i) t = t * y;
      for (int i = 0; i < m[2]; ++i) t = t * z;
      total = total + t;
    }
    return total;
  }

  /// Substitute each variable by a polynomial.
  Poly3 substitute(const Poly3& x, const Poly3& y, const Poly3& z) const {
    Poly3 r;
    for (const auto& [m, c] : terms_) {
      Poly3 t(c);
      for (int i = 0; i < m[0]; ++i) t = t * x;
      for (int i = 0; i < m[1]; ++i) t = t * y;
      for (int i = 0; i < m[2]; ++i) t = t * z;
      r = r + t;
    }
    return r;
  }

  std::string to_string(const std::array<std::string, 3>& names = {"x", "y", "z"}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.to_string() << ")";
      for (int v = 0; v < 3; ++v) {
        if (m[v] == 0) continue;
        os << "*" << names[v];
        if (m[v] > 1) os << "^" << m[v];
      }
    }
    return os.str();
  }

private:
  template <class V>
  static V coeff_cast(const K& c) {
    if constexpr (std::is_same_v<V, double> && std::is_same_v<K, QF13>)
      return c.to_double();
    else
      return V(c);
  }

  Terms terms_;
};

using PolyQ = Poly3<QF13>;

}  // namespace g2flag
