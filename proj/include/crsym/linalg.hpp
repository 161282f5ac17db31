#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crsym/matrix.hpp"

namespace crsym {

using Vec = std::vector<Scalar>;

struct Rref {
  SMat m;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination, pivoting on the first nonzero entry.
Rref rref(SMat m);
std::size_t rank(const SMat& m);
// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vec> kernel(const SMat& m);
std::optional<SMat> inverse(const SMat& m);
// Unique solution of m x = b, if it exists.
std::optional<Vec> solve_unique(const SMat& m, const Vec& b);

// Matrix whose columns are the given vectors.
SMat from_columns(const std::vector<Vec>& cols, std::size_t rows);
// Maximal linearly independent subfamily, in order.
std::vector<Vec> independent_subset(const std::vector<Vec>& vs, std::size_t dim);
// Coordinates of v in the span of the columns of basis, if it lies there.
std::optional<Vec> coordinates(const SMat& basis, const Vec& v);

// coeffs . x + constant = 0
struct AffineForm {
  Vec coeffs;
  Scalar constant;
};

struct AffineSpace {
  std::size_t ambient = 0;
  bool empty = true;
  Vec particular;
  std::vector<Vec> directions;

  std::size_t dimension() const { return directions.size(); }
  bool contains(const Vec& point) const;
  // Reduced implicit equations, one per codimension.
  std::vector<AffineForm> equations() const;
};

// Same point set (both empty, or equal dimension and mutual containment).
bool same_affine(const AffineSpace& a, const AffineSpace& b);

AffineSpace solve_affine(const std::vector<AffineForm>& equations, std::size_t ambient);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
Vec unit_vector(std::size_t n, std::size_t k);
bool is_zero(const Vec& v);
SMat mat_vec_column(const Vec& v);
Vec mat_vec(const SMat& m, const Vec& v);

}  // namespace crsym
