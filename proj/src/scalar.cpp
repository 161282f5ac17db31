#include "crsym/scalar.hpp"

#include <ostream>
#include <sstream>

namespace crsym {

void validate_radicand(int d) {
  if (d < 2) throw ArithmeticError("radicand must be an integer > 1, got " + std::to_string(d));
  for (int p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) throw ArithmeticError("radicand " + std::to_string(d) + " is not square-free");
}

Scalar::Scalar(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& c3, int d)
    : c_{c0, c1, c2, c3}, d_(d) {
  for (auto& c : c_) c.canonicalize();
  if (has_radical()) validate_radicand(d);
}

Scalar Scalar::i() { return Scalar(0, 1); }

Scalar Scalar::sqrt_d(int d) { return Scalar(0, 0, 1, 0, d); }

Scalar Scalar::from_string(const std::string& s) {
  Rational r;
  try {
    r = Rational(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (r.get_den() == 0) throw ArithmeticError("zero denominator in '" + s + "'");
  r.canonicalize();
  return Scalar(r);
}

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

int Scalar::radicand_of(const Scalar& a, const Scalar& b) {
  bool ra = a.has_radical(), rb = b.has_radical();
  if (ra && rb && a.d_ != b.d_)
    throw ArithmeticError("mixing sqrt(" + std::to_string(a.d_) + ") and sqrt(" + std::to_string(b.d_) + ")");
  if (ra) return a.d_;
  if (rb) return b.d_;
  return a.d_;
}

Scalar Scalar::conj() const { return Scalar(c_[0], -c_[1], c_[2], -c_[3], d_); }

Scalar Scalar::re() const { return Scalar(c_[0], 0, c_[2], 0, d_); }

Scalar Scalar::im() const { return Scalar(c_[1], 0, c_[3], 0, d_); }

Scalar Scalar::inv() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  // x * conj(x) lies in Q(sqrt d); clear the radical with its Galois conjugate.
  Scalar y = *this * conj();
  Scalar y_bar(y.c_[0], 0, -y.c_[2], 0, y.d_);
  Rational norm = y.c_[0] * y.c_[0] - y.d_ * y.c_[2] * y.c_[2];
  Scalar r = conj() * y_bar;
  Rational inv_norm = 1 / norm;
  return r * Scalar(inv_norm);
}

int Scalar::sign() const {
  if (!is_real()) throw ArithmeticError("sign of non-real scalar " + str());
  int s0 = sgn(c_[0]), s2 = sgn(c_[2]);
  if (s2 == 0) return s0;
  if (s0 == 0 || s0 == s2) return s2;
  Rational lhs = c_[0] * c_[0], rhs = d_ * c_[2] * c_[2];
  return cmp(lhs, rhs) > 0 ? s0 : s2;
}

Scalar Scalar::operator-() const { return Scalar(-c_[0], -c_[1], -c_[2], -c_[3], d_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = radicand_of(*this, o);
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = radicand_of(*this, o);
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  int d = radicand_of(*this, o);
  const auto& a = c_;
  const auto& b = o.c_;
  Rational r0 = a[0] * b[0] - a[1] * b[1] + d * (a[2] * b[2] - a[3] * b[3]);
  Rational r1 = a[0] * b[1] + a[1] * b[0] + d * (a[2] * b[3] + a[3] * b[2]);
  Rational r2 = a[0] * b[2] + a[2] * b[0] - a[1] * b[3] - a[3] * b[1];
  Rational r3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
  c_ = {r0, r1, r2, r3};
  d_ = d;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
  for (int k = 0; k < 4; ++k)
    if (a.c_[k] != b.c_[k]) return false;
  return !a.has_radical() || a.d_ == b.d_;
}

bool lex_less(const Scalar& a, const Scalar& b) {
  for (int k = 0; k < 4; ++k) {
    int c = cmp(a.c_[k], b.c_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Scalar::str() const {
  static const char* units[4] = {"", "i", "sqrt(%)", "i*sqrt(%)"};
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (sgn(c_[k]) == 0) continue;
    std::string unit = units[k];
    if (auto pos = unit.find('%'); pos != std::string::npos) unit.replace(pos, 1, std::to_string(d_));
    Rational mag = abs(c_[k]);
    bool neg = sgn(c_[k]) < 0;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    if (unit.empty())
      out << mag.get_str();
    else if (mag == 1)
      out << unit;
    else
      out << mag.get_str() << "*" << unit;
    first = false;
  }
  return first ? "0" : out.str();
}

std::array<std::string, 4> Scalar::serialize() const {
  return {c_[0].get_str(), c_[1].get_str(), c_[2].get_str(), c_[3].get_str()};
}

Scalar Scalar::parse(const std::array<std::string, 4>& parts, int d) {
  Rational c[4];
  for (int k = 0; k < 4; ++k) c[k] = from_string(parts[k])[0];
  return Scalar(c[0], c[1], c[2], c[3], d);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace crsym
