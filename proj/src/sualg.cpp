#include "crsym/sualg.hpp"

#include <algorithm>

namespace crsym {

void Signature::validate() const {
  if (p < 0 || q < 0) throw std::invalid_argument("signature entries must be non-negative: " + str());
  if (p > q) throw std::invalid_argument("signature must satisfy p <= q: " + str());
  if (p + q < 1) throw std::invalid_argument("signature needs n = p + q >= 1: " + str());
  if (i_sign != 1 && i_sign != -1) throw std::invalid_argument("i_sign must be +1 or -1: " + str());
}

std::string Signature::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + (i_sign < 0 ? ",I-" : "") + ")";
}

SMat hermitian_form_matrix(const Signature& sig) {
  const std::size_t n = sig.n(), N = n + 2;
  SMat H(N, N);
  H(0, N - 1) = Scalar(1);
  H(N - 1, 0) = Scalar(1);
  for (std::size_t k = 0; k < n; ++k) H(k + 1, k + 1) = Scalar(sig.I(k));
  return H;
}

SMat grading_element(const Signature& sig) {
  const std::size_t N = sig.size();
  SMat E(N, N);
  E(0, 0) = Scalar(1);
  E(N - 1, N - 1) = Scalar(-1);
  return E;
}

Scalar trace_form(const SMat& M, const SMat& N) {
  if (M.rows() != N.rows() || M.cols() != N.cols()) throw DimensionError("trace form of " + M.shape() + " and " + N.shape());
  return (M * N).trace();
}

std::vector<SMat> gminus_basis(const Signature& sig) {
  const std::size_t n = sig.n();
  std::vector<SMat> out;
  auto g = GradedParts<Scalar>::zero(n);
  g.x = Scalar(1);
  out.push_back(assemble(g, sig));
  for (std::size_t k = 0; k < n; ++k)
    for (const Scalar& v : {Scalar(1), Scalar::i()}) {
      auto h = GradedParts<Scalar>::zero(n);
      h.X[k] = v;
      out.push_back(assemble(h, sig));
    }
  return out;
}

std::vector<SMat> pplus_basis(const Signature& sig) {
  const std::size_t n = sig.n();
  std::vector<SMat> out;
  auto g = GradedParts<Scalar>::zero(n);
  g.z = Scalar(1);
  out.push_back(assemble(g, sig));
  for (std::size_t k = 0; k < n; ++k)
    for (const Scalar& v : {Scalar(1), Scalar::i()}) {
      auto h = GradedParts<Scalar>::zero(n);
      h.Z[k] = v;
      out.push_back(assemble(h, sig));
    }
  return out;
}

namespace {

// Skew-Hermitian basis: i E_kk, then E_jk - E_kj and i (E_jk + E_kj) for j < k.
std::vector<SMat> skew_hermitian_basis(std::size_t n) {
  std::vector<SMat> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(unit(n, k, k, Scalar::i()));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      out.push_back(unit(n, j, k) - unit(n, k, j));
      out.push_back(unit(n, j, k, Scalar::i()) + unit(n, k, j, Scalar::i()));
    }
  return out;
}

SMat i_matrix(const Signature& sig) {
  SMat I(sig.n(), sig.n());
  for (std::size_t k = 0; k < sig.n(); ++k) I(k, k) = Scalar(sig.I(k));
  return I;
}

}  // namespace

std::vector<SMat> g0_basis(const Signature& sig) {
  const std::size_t n = sig.n();
  std::vector<SMat> out{grading_element(sig)};
  SMat I = i_matrix(sig);
  for (const SMat& K : skew_hermitian_basis(n)) {
    auto g = GradedParts<Scalar>::zero(n);
    g.A = I * K;
    g.a = -g.A.trace() / Scalar(2);
    out.push_back(assemble(g, sig));
  }
  return out;
}

std::vector<SMat> su_basis(const Signature& sig) {
  std::vector<SMat> out = gminus_basis(sig);
  for (auto& m : g0_basis(sig)) out.push_back(std::move(m));
  for (auto& m : pplus_basis(sig)) out.push_back(std::move(m));
  return out;
}

std::vector<std::string> su_basis_names(const Signature& sig) {
  const std::size_t n = sig.n();
  std::vector<std::string> names{"x"};
  for (std::size_t k = 1; k <= 2 * n; ++k) names.push_back("X" + std::to_string(k));
  names.push_back("E");
  for (std::size_t k = 1; k <= n * n; ++k) names.push_back("u" + std::to_string(k));
  names.push_back("z");
  for (std::size_t k = 1; k <= 2 * n; ++k) names.push_back("Z" + std::to_string(k));
  return names;
}

Vec su_coords(const SMat& M, const Signature& sig) {
  require_member(M, sig);
  const std::size_t n = sig.n();
  Vec out = gminus_coords(M, sig);
  GradedParts<Scalar> g = decompose(M, sig);
  out.push_back(g.a.re());
  SMat K = i_matrix(sig) * g.A;
  for (std::size_t k = 0; k < n; ++k) out.push_back(K(k, k).im());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      out.push_back(K(j, k).re());
      out.push_back(K(j, k).im());
    }
  for (const Scalar& c : pplus_coords(M, sig)) out.push_back(c);
  return out;
}

SMat su_element(const Vec& coeffs, const Signature& sig) {
  std::vector<SMat> basis = su_basis(sig);
  if (coeffs.size() != basis.size()) throw DimensionError("su coefficient vector has wrong length");
  SMat M(sig.size(), sig.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coeffs[k].is_zero()) M += coeffs[k] * basis[k];
  return M;
}

SMat pairing_gram(const Signature& sig) {
  auto xi = gminus_basis(sig);
  auto eta = pplus_basis(sig);
  SMat G(xi.size(), eta.size());
  for (std::size_t a = 0; a < xi.size(); ++a)
    for (std::size_t b = 0; b < eta.size(); ++b) G(a, b) = trace_form(xi[a], eta[b]);
  return G;
}

std::vector<SMat> dual_pplus_basis(const Signature& sig) {
  auto eta = pplus_basis(sig);
  auto Ginv = inverse(pairing_gram(sig));
  if (!Ginv) throw std::logic_error("trace form pairing between g_- and p_+ is degenerate");
  std::vector<SMat> zeta;
  for (std::size_t c = 0; c < eta.size(); ++c) {
    SMat z(sig.size(), sig.size());
    for (std::size_t b = 0; b < eta.size(); ++b)
      if (!(*Ginv)(b, c).is_zero()) z += (*Ginv)(b, c) * eta[b];
    zeta.push_back(std::move(z));
  }
  return zeta;
}

namespace {

SMat x_element(const Vec& X, const Signature& sig) {
  auto g = GradedParts<Scalar>::zero(sig.n());
  g.X = X;
  return assemble(g, sig);
}

}  // namespace

LeviValue levi_form(const Vec& X, const Vec& Y, const Signature& sig) {
  if (X.size() != sig.n() || Y.size() != sig.n()) throw DimensionError("levi_form vectors must have length n");
  SMat mx = x_element(X, sig);
  SMat my = x_element(Y, sig);
  SMat miy = x_element(Scalar::i() * Y, sig);
  const Scalar half = Scalar(Rational(1, 2));
  Scalar re = half * gminus_coords(bracket(mx, miy), sig)[0];
  Scalar im = half * gminus_coords(bracket(mx, my), sig)[0];
  return {re, im};
}

SMat levi_gram(const Signature& sig) {
  const std::size_t n = sig.n();
  std::vector<Vec> basis;
  for (std::size_t k = 0; k < n; ++k) {
    basis.push_back(unit_vector(n, k));
    basis.push_back(Scalar::i() * unit_vector(n, k));
  }
  SMat G(2 * n, 2 * n);
  for (std::size_t a = 0; a < 2 * n; ++a)
    for (std::size_t b = 0; b < 2 * n; ++b) G(a, b) = levi_form(basis[a], basis[b], sig).re;
  return G;
}

Inertia inertia(const SMat& sym) {
  sym.require_square("inertia");
  SMat M = sym;
  const std::size_t n = M.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (M(r, c) != M(c, r) || !M(r, c).is_real()) throw std::invalid_argument("inertia needs a real symmetric matrix");
  auto swap_index = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n; ++c) std::swap(M(a, c), M(b, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(M(r, a), M(r, b));
  };
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && M(piv, piv).is_zero()) ++piv;
    if (piv == n) {
      // No diagonal pivot: fold an off-diagonal entry onto the diagonal.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (!M(i, j).is_zero()) {
            for (std::size_t c = 0; c < n; ++c) M(i, c) += M(j, c);
            for (std::size_t r = 0; r < n; ++r) M(r, i) += M(r, j);
            piv = i;
            found = true;
          }
      if (!found) {
        out.zero += n - k;
        break;
      }
    }
    if (piv != k) swap_index(piv, k);
    const Scalar d = M(k, k);
    (d.sign() > 0 ? out.pos : out.neg) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (M(r, k).is_zero()) continue;
      Scalar f = M(r, k) / d;
      for (std::size_t c = 0; c < n; ++c) M(r, c) -= f * M(k, c);
      for (std::size_t c = 0; c < n; ++c) M(c, r) -= f * M(c, k);
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> levi_signature(const Signature& sig) {
  Inertia in = inertia(levi_gram(sig));
  if (in.zero != 0) throw std::logic_error("Levi form is degenerate");
  return {std::min(in.pos, in.neg), std::max(in.pos, in.neg)};
}

void require_csu(const Scalar& a, const SMat& A, const Signature& sig) {
  if (A.rows() != sig.n() || A.cols() != sig.n()) throw DimensionError("csu block has wrong size");
  if (!(a + A.trace() - a.conj()).is_zero()) throw MembershipError("csu block violates a + tr(A) - conj(a) = 0");
  SMat I = i_matrix(sig);
  if (!(conj_transpose(A) * I + I * A).is_zero()) throw MembershipError("csu block violates A*I + IA = 0");
}

CsuSplit u_pq_complement_split(const Scalar& a, const SMat& A, const Signature& sig) {
  require_csu(a, A, sig);
  Scalar c = a.re();
  return {a - c, A, c};
}

}  // namespace crsym
