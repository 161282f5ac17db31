#include "crsym/poly.hpp"

#include <sstream>

namespace crsym {

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (const auto& [name, e] : m) {
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

Poly Poly::var(const std::string& name) {
  Poly p;
  p.terms_[{{name, 1}}] = Scalar(1);
  return p;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

int Poly::degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [name, e] : m) d += static_cast<int>(e);
    deg = std::max(deg, d);
  }
  return deg;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) out.insert(name);
  return out;
}

Scalar Poly::constant_term() const { return coefficient({}); }

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar Poly::linear_coefficient(const std::string& name) const { return coefficient({{name, 1}}); }

Scalar Poly::to_scalar() const {
  if (!is_constant()) throw std::invalid_argument("polynomial " + str() + " is not constant");
  return constant_term();
}

Poly Poly::conj() const {
  Poly p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, c.conj());
  return p;
}

Poly Poly::re() const {
  Poly p;
  for (const auto& [m, c] : terms_) p.add_term(m, c.re());
  return p;
}

Poly Poly::im() const {
  Poly p;
  for (const auto& [m, c] : terms_) p.add_term(m, c.im());
  return p;
}

Scalar Poly::eval(const Assignment& a) const {
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (const auto& [name, e] : m) {
      auto it = a.find(name);
      if (it == a.end()) throw MissingUnknown(name);
      for (unsigned k = 0; k < e; ++k) t *= it->second;
    }
    total += t;
  }
  return total;
}

Poly Poly::substitute(const std::map<std::string, Poly>& subs) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    Monomial kept;
    for (const auto& [name, e] : m) {
      auto it = subs.find(name);
      if (it == subs.end()) {
        kept.emplace_back(name, e);
        continue;
      }
      for (unsigned k = 0; k < e; ++k) t *= it->second;
    }
    if (!kept.empty()) {
      Poly mono;
      mono.terms_[kept] = Scalar(1);
      t *= mono;
    }
    out += t;
  }
  return out;
}

Poly Poly::operator-() const {
  Poly p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (m.empty()) {
      out << c.str();
    } else if (c == Scalar(1)) {
      out << monomial_str(m);
    } else {
      out << "(" << c.str() << ")*" << monomial_str(m);
    }
  }
  return out.str();
}

}  // namespace crsym
