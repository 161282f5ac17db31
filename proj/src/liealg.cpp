#include "crsym/liealg.hpp"

#include <stdexcept>

namespace crsym {

namespace {

Rational to_rational(const Scalar& s, const char* what) {
  if (!s.is_rational()) throw std::invalid_argument(std::string(what) + ": structure constant " + s.str() + " is not rational");
  return s[0];
}

}  // namespace

Vec realify(const SMat& m) {
  Vec v;
  v.reserve(2 * m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      v.push_back(m(r, c).re());
      v.push_back(m(r, c).im());
    }
  return v;
}

LieAlg LieAlg::abelian(const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  LieAlg g;
  g.names = names;
  g.c.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  return g;
}

LieAlg LieAlg::from_matrices(const std::vector<std::string>& names, const std::vector<SMat>& mats) {
  if (names.size() != mats.size()) throw std::invalid_argument("one name per matrix required");
  LieAlg g = abelian(names);
  const std::size_t n = mats.size();
  if (n == 0) return g;
  std::vector<Vec> cols;
  for (const auto& m : mats) cols.push_back(realify(m));
  const SMat basis = from_columns(cols, cols[0].size());
  if (rank(basis) != n) throw std::invalid_argument("matrices are linearly dependent");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto coords = coordinates(basis, realify(crsym::bracket(mats[i], mats[j])));
      if (!coords) throw std::invalid_argument("span is not closed: [" + names[i] + ", " + names[j] + "]");
      for (std::size_t k = 0; k < n; ++k) {
        Rational r = to_rational((*coords)[k], "from_matrices");
        g.c[i][j][k] = r;
        g.c[j][i][k] = -r;
      }
    }
  return g;
}

Vec LieAlg::bracket_basis(std::size_t i, std::size_t j) const {
  Vec v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = Scalar(c[i][j][k]);
  return v;
}

Vec LieAlg::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim()) throw DimensionError("bracket argument has wrong length");
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j].is_zero() || i == j) continue;
      const Scalar f = u[i] * v[j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (sgn(c[i][j][k]) != 0) out[k] += f * Scalar(c[i][j][k]);
    }
  }
  return out;
}

SMat LieAlg::ad(const Vec& u) const {
  SMat m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = bracket(u, unit_vector(dim(), j));
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

bool LieAlg::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (c[i][j][k] != -c[j][i][k]) return false;
  return true;
}

bool LieAlg::satisfies_jacobi() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vec s = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) + bracket(ek, bracket(ei, ej));
        if (!is_zero(s)) return false;
      }
  return true;
}

void LieAlg::validate() const {
  const std::size_t n = dim();
  if (c.size() != n) throw std::invalid_argument("structure constants do not match the dimension");
  for (const auto& row : c) {
    if (row.size() != n) throw std::invalid_argument("structure constants do not match the dimension");
    for (const auto& v : row)
      if (v.size() != n) throw std::invalid_argument("structure constants do not match the dimension");
  }
  if (!is_antisymmetric()) throw std::invalid_argument("structure constants are not antisymmetric");
  if (!satisfies_jacobi()) throw std::invalid_argument("structure constants violate the Jacobi identity");
}

LieAlg LieAlg::change_basis(const std::vector<Vec>& basis, const std::vector<std::string>& new_names) const {
  const std::size_t n = dim();
  if (basis.size() != n || new_names.size() != n) throw std::invalid_argument("new basis must have dim() vectors");
  const SMat P = from_columns(basis, n);
  auto Pinv = inverse(P);
  if (!Pinv) throw std::invalid_argument("new basis vectors are linearly dependent");
  LieAlg g = abelian(new_names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec coords = mat_vec(*Pinv, bracket(basis[i], basis[j]));
      for (std::size_t k = 0; k < n; ++k) {
        Rational r = to_rational(coords[k], "change_basis");
        g.c[i][j][k] = r;
        g.c[j][i][k] = -r;
      }
    }
  return g;
}

bool LieAlg::is_subalgebra(const std::vector<Vec>& span) const {
  std::vector<Vec> basis = independent_subset(span, dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      std::vector<Vec> with = basis;
      with.push_back(bracket(basis[i], basis[j]));
      if (rank(from_columns(with, dim())) != basis.size()) return false;
    }
  return true;
}

}  // namespace crsym
