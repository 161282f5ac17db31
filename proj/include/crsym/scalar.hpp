#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace crsym {

using Rational = mpq_class;

struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr int kDefaultD = 2;

// Checks that d is a square-free integer greater than 1.
void validate_radicand(int d);

// Element c0 + c1*i + c2*sqrt(d) + c3*i*sqrt(d) of Q(i, sqrt d).
//
// The radicand only matters when c2 or c3 is nonzero; mixing two different
// radicands in one operation throws ArithmeticError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : c_{Rational(v), 0, 0, 0} {}
  Scalar(long v) : c_{Rational(v), 0, 0, 0} {}
  Scalar(const Rational& r) : c_{r, 0, 0, 0} {}
  Scalar(const Rational& c0, const Rational& c1, const Rational& c2 = 0,
         const Rational& c3 = 0, int d = kDefaultD);

  static Scalar i();
  static Scalar sqrt_d(int d = kDefaultD);
  static Scalar from_string(const std::string& s);  // rational "a/b"

  const Rational& operator[](int k) const { return c_[k]; }
  int d() const { return d_; }
  bool has_radical() const { return sgn(c_[2]) != 0 || sgn(c_[3]) != 0; }

  bool is_zero() const;
  bool is_real() const { return sgn(c_[1]) == 0 && sgn(c_[3]) == 0; }
  bool is_rational() const { return is_real() && sgn(c_[2]) == 0; }

  Scalar conj() const;
  Scalar re() const;  // c0 + c2*sqrt(d)
  Scalar im() const;  // c1 + c3*sqrt(d), returned as a real scalar
  Scalar inv() const;

  // Sign of a real scalar; throws for non-real input.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total order on coefficient tuples; only used for canonical sorting.
  friend bool lex_less(const Scalar& a, const Scalar& b);

  std::string str() const;
  std::array<std::string, 4> serialize() const;
  static Scalar parse(const std::array<std::string, 4>& parts, int d);

 private:
  static int radicand_of(const Scalar& a, const Scalar& b);

  std::array<Rational, 4> c_{};
  int d_ = kDefaultD;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar conj(const Scalar& s) { return s.conj(); }
inline Scalar re(const Scalar& s) { return s.re(); }
inline Scalar im(const Scalar& s) { return s.im(); }
inline bool is_zero(const Scalar& s) { return s.is_zero(); }

}  // namespace crsym
