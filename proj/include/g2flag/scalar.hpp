#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace g2flag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact scalar a + b*sqrt(13) with rational a, b.  This quadratic field
/// hosts every constant the algebra and flow computations need.
class QF13 {
public:
  QF13() = default;
  QF13(long v) : rat_(v) {}                 // NOLINT(google-explicit-constructor)
  QF13(Rational r) : rat_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  QF13(Rational r, Rational i) : rat_(std::move(r)), irr_(std::move(i)) {}

  static QF13 sqrt13() { return QF13(Rational(0), Rational(1)); }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }

  bool is_zero() const { return rat_ == 0 && irr_ == 0; }
  bool is_rational() const { return irr_ == 0; }

  QF13 operator-() const { return QF13(-rat_, -irr_); }

  QF13& operator+=(const QF13& o) {
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
  }
  QF13& operator-=(const QF13& o) {
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
  }
  QF13& operator*=(const QF13& o) {
    Rational r = rat_ * o.rat_ + 13 * irr_ * o.irr_;
    Rational i = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = std::move(r);
    irr_ = std::move(i);
    return *this;
  }
  QF13& operator/=(const QF13& o) {
    if (o.is_zero()) throw std::domain_error("QF13: division by zero");
    // Multiply by the conjugate; the norm a^2 - 13 b^2 is nonzero for o != 0.
    Rational norm = o.rat_ * o.rat_ - 13 * o.irr_ * o.irr_;
    Rational r = (rat_ * o.rat_ - 13 * irr_ * o.irr_) / norm;
    Rational i = (irr_ * o.rat_ - rat_ * o.irr_) / norm;
    rat_ = std::move(r);
    irr_ = std::move(i);
    return *this;
  }

  friend QF13 operator+(QF13 a, const QF13& b) { return a += b; }
  friend QF13 operator-(QF13 a, const QF13& b) { return a -= b; }
  friend QF13 operator*(QF13 a, const QF13& b) { return a *= b; }
  friend QF13 operator/(QF13 a, const QF13& b) { return a /= b; }
  friend bool operator==(const QF13& a, const QF13& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend bool operator!=(const QF13& a, const QF13& b) { return !(a == b); }

  /// Exact sign in {-1, 0, +1}.
  int sign() const;

  /// Nearest-double evaluation; throws on overflow.
  double to_double() const;

  QF13 inverse() const {
    QF13 one(1);
    return one /= *this;
  }

  /// Exact square root inside the field, when it exists.
  std::optional<QF13> sqrt_exact() const;

  /// Textual form "p/q + r/s*sqrt13" (exact round-trip with parse()).
  std::string to_string() const;
  static QF13 parse(const std::string& text);

private:
  Rational rat_{0};
  Rational irr_{0};
};

inline QF13 operator*(long a, const QF13& b) { return QF13(a) * b; }
inline QF13 operator*(const QF13& a, long b) { return a * QF13(b); }

/// Rational made from a fraction of longs, for constants like 3/26.
inline QF13 qf(long num, long den = 1) { return QF13(Rational(num, den)); }

inline bool operator<(const QF13& a, const QF13& b) { return (a - b).sign() < 0; }
inline bool operator>(const QF13& a, const QF13& b) { return (a - b).sign() > 0; }
inline bool operator<=(const QF13& a, const QF13& b) { return (a - b).sign() <= 0; }
inline bool operator>=(const QF13& a, const QF13& b) { return (a - b).sign() >= 0; }

inline QF13 abs(const QF13& a) { return a.sign() < 0 ? -a : a; }

double to_double(const Rational& r);
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace g2flag

namespace Eigen {

template <>
struct NumTraits<g2flag::QF13> : GenericNumTraits<g2flag::QF13> {
  typedef g2flag::QF13 Real;
  typedef g2flag::QF13 NonInteger;
  typedef g2flag::QF13 Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 120,
  };
  static inline Real epsilon() { return g2flag::QF13(0); }
  static inline Real dummy_precision() { return g2flag::QF13(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
