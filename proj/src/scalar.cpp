#include "g2flag/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>

namespace g2flag {

namespace {

int rational_sign(const Rational& r) {
  if (r == 0) return 0;
  return r > 0 ? 1 : -1;
}

}  // namespace

double to_double(const Rational& r) {
  double v = r.convert_to<double>();
  if (!std::isfinite(v)) throw std::overflow_error("rational does not fit in double");
  return v;
}

int QF13::sign() const {
  int sr = rational_sign(rat_);
  int si = rational_sign(irr_);
  if (si == 0) return sr;
  if (sr == 0) return si;
  if (sr == si) return sr;
  // Opposite component signs: compare rat^2 against 13*irr^2.
  Rational lhs = rat_ * rat_;
  Rational rhs = 13 * irr_ * irr_;
  if (lhs == rhs) return 0;  // impossible for nonzero entries, sqrt(13) irrational
  return lhs > rhs ? sr : si;
}

double QF13::to_double() const {
  static const double kSqrt13 = std::sqrt(13.0);
  double v = g2flag::to_double(rat_) + g2flag::to_double(irr_) * kSqrt13;
  if (!std::isfinite(v)) throw std::overflow_error("QF13 does not fit in double");
  return v;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt ns = boost::multiprecision::sqrt(num);
  BigInt ds = boost::multiprecision::sqrt(den);
  if (ns * ns != num || ds * ds != den) return std::nullopt;
  return Rational(ns, ds);
}

std::optional<QF13> QF13::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  if (irr_ == 0) {
    if (auto p = rational_sqrt(rat_)) return QF13(*p);
    if (auto q = rational_sqrt(rat_ / 13)) return QF13(Rational(0), *q);
    return std::nullopt;
  }
  // (p + q*sqrt13)^2 = rat + irr*sqrt13 forces p^2 to be a root of
  // t^2 - rat*t + 13*irr^2/4.
  Rational disc = rat_ * rat_ - 13 * irr_ * irr_;
  auto d = rational_sqrt(disc);
  if (!d) return std::nullopt;
  for (int s : {1, -1}) {
    Rational p2 = (rat_ + s * (*d)) / 2;
    auto p = rational_sqrt(p2);
    if (!p || *p == 0) continue;
    Rational q = irr_ / (2 * (*p));
    QF13 root(*p, q);
    if (root * root == *this) return root.sign() >= 0 ? root : -root;
  }
  return std::nullopt;
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rational parse_rational(const std::string& s) {
  return Rational(s);
}

}  // namespace

std::string QF13::to_string() const {
  if (irr_ == 0) return rational_str(rat_);
  std::string out;
  if (rat_ != 0) out = rational_str(rat_) + " + ";
  out += rational_str(irr_) + "*sqrt13";
  return out;
}

QF13 QF13::parse(const std::string& text) {
  // Accepts sums of terms, each "r", "r*sqrt13", or "sqrt13" with optional sign.
  QF13 result(0);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("QF13: empty literal");
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sgn = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sgn = -sgn;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
    std::string term = s.substr(start, pos - start);
    if (term.empty()) throw std::invalid_argument("QF13: bad literal '" + text + "'");
    bool has_sqrt = false;
    Rational coeff(1);
    auto star = term.find("*sqrt13");
    if (term == "sqrt13") {
      has_sqrt = true;
    } else if (star != std::string::npos && star + 7 == term.size()) {
      has_sqrt = true;
      coeff = parse_rational(term.substr(0, star));
    } else {
      coeff = parse_rational(term);
    }
    if (sgn < 0) coeff = -coeff;
    if (has_sqrt)
      result += QF13(Rational(0), coeff);
    else
      result += QF13(coeff);
  }
  return result;
}

}  // namespace g2flag
