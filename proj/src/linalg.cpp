#include "crsym/linalg.hpp"

namespace crsym {

Rref rref(SMat m) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    Scalar inv = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.m = std::move(m);
  return out;
}

std::size_t rank(const SMat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel(const SMat& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<SMat> inverse(const SMat& m) {
  m.require_square("inverse");
  std::size_t n = m.rows();
  SMat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  Rref rr = rref(aug);
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  SMat out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = rr.m(r, n + c);
  return out;
}

std::optional<Vec> solve_unique(const SMat& m, const Vec& b) {
  std::vector<AffineForm> eqs;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    AffineForm f{Vec(m.cols()), -b[r]};
    for (std::size_t c = 0; c < m.cols(); ++c) f.coeffs[c] = m(r, c);
    eqs.push_back(std::move(f));
  }
  AffineSpace s = solve_affine(eqs, m.cols());
  if (s.empty || s.dimension() != 0) return std::nullopt;
  return s.particular;
}

SMat from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  SMat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Vec> independent_subset(const std::vector<Vec>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  Rref r = rref(from_columns(vs, dim));
  std::vector<Vec> out;
  for (auto p : r.pivots) out.push_back(vs[p]);
  return out;
}

std::optional<Vec> coordinates(const SMat& basis, const Vec& v) {
  std::vector<AffineForm> eqs;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    AffineForm f{Vec(basis.cols()), -v[r]};
    for (std::size_t c = 0; c < basis.cols(); ++c) f.coeffs[c] = basis(r, c);
    eqs.push_back(std::move(f));
  }
  AffineSpace s = solve_affine(eqs, basis.cols());
  if (s.empty) return std::nullopt;
  if (s.dimension() != 0) throw DimensionError("coordinates requested in a dependent family");
  return s.particular;
}

AffineSpace solve_affine(const std::vector<AffineForm>& equations, std::size_t ambient) {
  AffineSpace out;
  out.ambient = ambient;
  SMat aug(equations.size(), ambient + 1);
  for (std::size_t r = 0; r < equations.size(); ++r) {
    if (equations[r].coeffs.size() != ambient) throw DimensionError("affine form length mismatch");
    for (std::size_t c = 0; c < ambient; ++c) aug(r, c) = equations[r].coeffs[c];
    aug(r, ambient) = -equations[r].constant;
  }
  Rref rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == ambient) return out;  // 0 = 1
  out.empty = false;
  out.particular = Vec(ambient);
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) out.particular[rr.pivots[k]] = rr.m(k, ambient);
  SMat coeffs(equations.size(), ambient);
  for (std::size_t r = 0; r < equations.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c) coeffs(r, c) = equations[r].coeffs[c];
  out.directions = kernel(coeffs);
  return out;
}

bool same_affine(const AffineSpace& a, const AffineSpace& b) {
  if (a.ambient != b.ambient || a.empty != b.empty) return false;
  if (a.empty) return true;
  if (a.dimension() != b.dimension() || !b.contains(a.particular)) return false;
  for (const auto& d : a.directions)
    if (!b.contains(a.particular + d)) return false;
  return true;
}

bool AffineSpace::contains(const Vec& point) const {
  if (empty || point.size() != ambient) return false;
  Vec diff = point - particular;
  if (directions.empty()) return crsym::is_zero(diff);
  std::vector<Vec> with = directions;
  with.push_back(diff);
  return rank(from_columns(with, ambient)) == directions.size();
}

std::vector<AffineForm> AffineSpace::equations() const {
  if (empty) return {AffineForm{Vec(ambient), Scalar(1)}};
  // Normals annihilate every direction; rows of the reduced normal matrix
  // give the canonical equations.
  SMat dirs(directions.size(), ambient);
  for (std::size_t r = 0; r < directions.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c) dirs(r, c) = directions[r][c];
  std::vector<Vec> normals;
  if (directions.empty()) {
    for (std::size_t k = 0; k < ambient; ++k) normals.push_back(unit_vector(ambient, k));
  } else {
    normals = kernel(dirs);
  }
  if (normals.empty()) return {};
  SMat nm(normals.size(), ambient);
  for (std::size_t r = 0; r < normals.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c) nm(r, c) = normals[r][c];
  Rref rr = rref(nm);
  std::vector<AffineForm> out;
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    AffineForm f{Vec(ambient), Scalar()};
    for (std::size_t c = 0; c < ambient; ++c) {
      f.coeffs[c] = rr.m(r, c);
      f.constant -= rr.m(r, c) * particular[c];
    }
    out.push_back(std::move(f));
  }
  return out;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vec v(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) v[k] = a[k] + b[k];
  return v;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vec v(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) v[k] = a[k] - b[k];
  return v;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = s * v[k];
  return out;
}

Vec unit_vector(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

SMat mat_vec_column(const Vec& v) { return from_columns({v}, v.size()); }

Vec mat_vec(const SMat& m, const Vec& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector length mismatch");
  Vec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace crsym
