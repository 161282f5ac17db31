#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crsym/scalar.hpp"

namespace crsym {

struct MissingUnknown : std::invalid_argument {
  explicit MissingUnknown(const std::string& name)
      : std::invalid_argument("no value for unknown '" + name + "'"), symbol(name) {}
  std::string symbol;
};

// Sorted (name, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

using Assignment = std::map<std::string, Scalar>;

// Sparse polynomial over F in named unknowns. Unknowns are real, so
// conjugation acts on coefficients only.
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& c);
  Poly(int v) : Poly(Scalar(v)) {}

  static Poly var(const std::string& name);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;
  std::set<std::string> variables() const;

  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  // Coefficient of a degree-one monomial in `name`.
  Scalar linear_coefficient(const std::string& name) const;
  // Throws if the polynomial still contains unknowns.
  Scalar to_scalar() const;

  Poly conj() const;
  Poly re() const;
  Poly im() const;

  Scalar eval(const Assignment& a) const;
  Poly substitute(const std::map<std::string, Poly>& subs) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);

  std::map<Monomial, Scalar> terms_;
};

inline Poly conj(const Poly& p) { return p.conj(); }
inline Poly re(const Poly& p) { return p.re(); }
inline Poly im(const Poly& p) { return p.im(); }
inline bool is_zero(const Poly& p) { return p.is_zero(); }

Monomial monomial_product(const Monomial& a, const Monomial& b);
std::string monomial_str(const Monomial& m);

}  // namespace crsym
