#pragma once

#include <string>
#include <vector>

#include "crsym/linalg.hpp"

namespace crsym {

// Real Lie algebra with rational structure constants:
// [b_i, b_j] = sum_k c[i][j][k] b_k.
struct LieAlg {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<Rational>>> c;

  static LieAlg abelian(const std::vector<std::string>& names);
  // Structure constants of a bracket-closed family of linearly independent matrices.
  static LieAlg from_matrices(const std::vector<std::string>& names, const std::vector<SMat>& mats);

  std::size_t dim() const { return names.size(); }
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& u, const Vec& v) const;
  // Matrix of ad(u) acting on coordinate vectors.
  SMat ad(const Vec& u) const;

  bool is_antisymmetric() const;
  bool satisfies_jacobi() const;
  // Throws std::invalid_argument naming the first violation.
  void validate() const;

  // Structure constants in a new basis given by coordinate vectors.
  LieAlg change_basis(const std::vector<Vec>& basis, const std::vector<std::string>& new_names) const;
  // Whether the span of the given vectors is closed under the bracket.
  bool is_subalgebra(const std::vector<Vec>& span) const;

  friend bool operator==(const LieAlg& a, const LieAlg& b) { return a.names == b.names && a.c == b.c; }
};

// Real and imaginary parts of every entry, as one long real vector.
Vec realify(const SMat& m);

}  // namespace crsym
