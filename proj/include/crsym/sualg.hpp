#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crsym/linalg.hpp"

namespace crsym {

struct MembershipError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Levi signature (p, q) together with the sign of the block matrix I:
// I = i_sign * diag(1 x p, -1 x q).
struct Signature {
  int p = 0;
  int q = 1;
  int i_sign = 1;

  std::size_t n() const { return static_cast<std::size_t>(p + q); }
  std::size_t size() const { return n() + 2; }
  int I(std::size_t k) const { return static_cast<int>(k) < p ? i_sign : -i_sign; }
  void validate() const;
  std::string str() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p == b.p && a.q == b.q && a.i_sign == b.i_sign;
  }
};

// Block data of an element of su(p+1,q+1):
// [[a, Z, iz], [X, A, -IZ*], [ix, -X*I, -conj(a)]].
template <class T>
struct GradedParts {
  T x;
  std::vector<T> X;
  T a;
  Mat<T> A;
  std::vector<T> Z;
  T z;

  static GradedParts zero(std::size_t n) { return GradedParts{T(), std::vector<T>(n), T(), Mat<T>(n, n), std::vector<T>(n), T()}; }
};

SMat hermitian_form_matrix(const Signature& sig);

// Block index of a row/column: 0 for the first, 1 for the middle, 2 for the last.
inline int block_of(std::size_t k, std::size_t n) { return k == 0 ? 0 : (k <= n ? 1 : 2); }

// Grade of the matrix entry (r, c).
inline int grade_of(std::size_t r, std::size_t c, std::size_t n) { return block_of(c, n) - block_of(r, n); }

template <class T>
void check_blocks(const GradedParts<T>& g, const Signature& sig) {
  if (!is_zero(im(g.x))) throw MembershipError("block x must be real");
  if (!is_zero(im(g.z))) throw MembershipError("block z must be real");
  T trace_cond = g.a + g.A.trace() - conj(g.a);
  if (!is_zero(trace_cond)) throw MembershipError("block (a, A) violates a + tr(A) - conj(a) = 0");
  Mat<T> Im(sig.n(), sig.n());
  for (std::size_t k = 0; k < sig.n(); ++k) Im(k, k) = T(sig.I(k));
  if (!(conj_transpose(g.A) * Im + Im * g.A).is_zero()) throw MembershipError("block A violates A*I + IA = 0");
}

// With check = false the block invariants are not enforced; used for
// skeletons whose trace condition is imposed later as an equation.
template <class T>
Mat<T> assemble(const GradedParts<T>& g, const Signature& sig, bool check = true) {
  const std::size_t n = sig.n(), N = n + 2;
  if (g.X.size() != n || g.Z.size() != n || g.A.rows() != n || g.A.cols() != n)
    throw DimensionError("graded parts do not match signature " + sig.str());
  if (check) check_blocks(g, sig);

  const T iu(Scalar::i());
  Mat<T> M(N, N);
  M(0, 0) = g.a;
  M(0, N - 1) = iu * g.z;
  M(N - 1, 0) = iu * g.x;
  M(N - 1, N - 1) = -conj(g.a);
  for (std::size_t k = 0; k < n; ++k) {
    M(0, k + 1) = g.Z[k];
    M(k + 1, 0) = g.X[k];
    M(k + 1, N - 1) = -(T(sig.I(k)) * conj(g.Z[k]));
    M(N - 1, k + 1) = -(conj(g.X[k]) * T(sig.I(k)));
    for (std::size_t j = 0; j < n; ++j) M(k + 1, j + 1) = g.A(k, j);
  }
  return M;
}

template <class T>
Mat<T> to_poly_if(const SMat& m);

template <>
inline SMat to_poly_if<Scalar>(const SMat& m) { return m; }

template <>
inline PMat to_poly_if<Poly>(const SMat& m) { return to_poly(m); }

template <class T>
bool is_member(const Mat<T>& M, const Signature& sig) {
  if (M.rows() != sig.size() || M.cols() != sig.size()) return false;
  Mat<T> H = to_poly_if<T>(hermitian_form_matrix(sig));
  return (conj_transpose(M) * H + H * M).is_zero() && is_zero(M.trace());
}

template <class T>
void require_member(const Mat<T>& M, const Signature& sig) {
  if (!is_member(M, sig)) throw MembershipError("matrix is not in su(p+1,q+1) for " + sig.str() + ": " + to_string(M));
}

template <class T>
GradedParts<T> decompose(const Mat<T>& M, const Signature& sig) {
  require_member(M, sig);
  const std::size_t n = sig.n(), N = n + 2;
  const T minus_i(-Scalar::i());
  GradedParts<T> g = GradedParts<T>::zero(n);
  g.x = minus_i * M(N - 1, 0);
  g.z = minus_i * M(0, N - 1);
  g.a = M(0, 0);
  for (std::size_t k = 0; k < n; ++k) {
    g.X[k] = M(k + 1, 0);
    g.Z[k] = M(0, k + 1);
    for (std::size_t j = 0; j < n; ++j) g.A(k, j) = M(k + 1, j + 1);
  }
  return g;
}

// Entry mask onto the grade-k block; works for any square matrix of the
// right size, member or not.
template <class T>
Mat<T> grade_mask(const Mat<T>& M, int k, const Signature& sig) {
  if (M.rows() != sig.size() || M.cols() != sig.size()) throw DimensionError("grade projection size mismatch");
  Mat<T> out(M.rows(), M.cols());
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (grade_of(r, c, sig.n()) == k) out(r, c) = M(r, c);
  return out;
}

template <class T>
Mat<T> grade_project(const Mat<T>& M, int k, const Signature& sig) {
  if (k < -2 || k > 2) throw std::out_of_range("grade must lie in -2..2");
  require_member(M, sig);
  return grade_mask(M, k, sig);
}

// Projection onto g_- = g_{-2} + g_{-1}.
template <class T>
Mat<T> minus_part(const Mat<T>& M, const Signature& sig) {
  return grade_mask(M, -2, sig) + grade_mask(M, -1, sig);
}

// Real coordinates of the g_- part in the canonical basis
// [x, e_1, i e_1, ..., e_n, i e_n].
template <class T>
std::vector<T> gminus_coords(const Mat<T>& M, const Signature& sig) {
  const std::size_t n = sig.n(), N = n + 2;
  std::vector<T> v;
  v.push_back(re(T(-Scalar::i()) * M(N - 1, 0)));
  for (std::size_t k = 0; k < n; ++k) {
    v.push_back(re(M(k + 1, 0)));
    v.push_back(im(M(k + 1, 0)));
  }
  return v;
}

// Real coordinates of the g_1 + g_2 part in the basis [z, e_1, i e_1, ...].
template <class T>
std::vector<T> pplus_coords(const Mat<T>& M, const Signature& sig) {
  const std::size_t n = sig.n(), N = n + 2;
  std::vector<T> v;
  v.push_back(re(T(-Scalar::i()) * M(0, N - 1)));
  for (std::size_t k = 0; k < n; ++k) {
    v.push_back(re(M(0, k + 1)));
    v.push_back(im(M(0, k + 1)));
  }
  return v;
}

SMat grading_element(const Signature& sig);
Scalar trace_form(const SMat& M, const SMat& N);

std::vector<SMat> gminus_basis(const Signature& sig);
std::vector<SMat> pplus_basis(const Signature& sig);
// E_gr followed by a basis of u(p,q).
std::vector<SMat> g0_basis(const Signature& sig);
std::vector<SMat> su_basis(const Signature& sig);
std::vector<std::string> su_basis_names(const Signature& sig);
// Real coordinates of a member in su_basis.
Vec su_coords(const SMat& M, const Signature& sig);
// Element sum_k c_k b_k of su_basis for a real coefficient vector.
SMat su_element(const Vec& coeffs, const Signature& sig);

// Gram matrix G_ab = tr(xi_a eta_b) between gminus_basis and pplus_basis.
SMat pairing_gram(const Signature& sig);
// zeta^c = sum_b (G^-1)_{bc} eta_b, so that tr(xi_a zeta^c) = delta_ac.
std::vector<SMat> dual_pplus_basis(const Signature& sig);

struct LeviValue {
  Scalar re;
  Scalar im;
};

LeviValue levi_form(const Vec& X, const Vec& Y, const Signature& sig);
// Gram matrix of the real part on the real basis (e_1, i e_1, ..., e_n, i e_n).
SMat levi_gram(const Signature& sig);

struct Inertia {
  std::size_t pos = 0, neg = 0, zero = 0;
};
// Sylvester inertia of a real symmetric matrix by exact congruence.
Inertia inertia(const SMat& sym);
// Unordered (min, max) pair of the inertia of the real Levi form.
std::pair<std::size_t, std::size_t> levi_signature(const Signature& sig);

struct CsuSplit {
  Scalar u_a;  // a - Re(a)
  SMat u_A;
  Scalar gr_coefficient;  // Re(a)
};

void require_csu(const Scalar& a, const SMat& A, const Signature& sig);
CsuSplit u_pq_complement_split(const Scalar& a, const SMat& A, const Signature& sig);

}  // namespace crsym
