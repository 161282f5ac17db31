#include "crsym/symmetries.hpp"

#include <optional>

namespace crsym {

SymmetryMatrix make_symmetry(const Vec& Z, const Scalar& z, const Signature& sig) {
  sig.validate();
  const std::size_t n = sig.n(), N = n + 2;
  if (Z.size() != n) throw DimensionError("Z must have length n");
  if (!z.is_real()) throw std::invalid_argument("z must be real, got " + z.str());

  Scalar zIz;
  for (std::size_t k = 0; k < n; ++k) zIz += Z[k] * Scalar(sig.I(k)) * Z[k].conj();
  SMat s(N, N);
  s(0, 0) = Scalar(-1);
  s(N - 1, N - 1) = Scalar(-1);
  s(0, N - 1) = Scalar::i() * z + Scalar(Rational(1, 2)) * zIz;
  for (std::size_t k = 0; k < n; ++k) {
    s(0, k + 1) = -Z[k];
    s(k + 1, k + 1) = Scalar(1);
    s(k + 1, N - 1) = -(Scalar(sig.I(k)) * Z[k].conj());
  }

  const SMat H = hermitian_form_matrix(sig);
  if (conj_transpose(s) * H * s != H) throw std::logic_error("s_{Z,z} does not preserve the form m");
  for (std::size_t r = 1; r < N; ++r)
    if (!s(r, 0).is_zero()) throw std::logic_error("s_{Z,z} does not fix the line <e0>");
  const SMat s_inv = H * conj_transpose(s) * H;
  auto xi = gminus_basis(sig);
  for (std::size_t k = 1; k < xi.size(); ++k)
    if (grade_mask(SMat(s * xi[k] * s_inv), -1, sig) != -xi[k])
      throw std::logic_error("s_{Z,z} does not act by -id on g_-1");
  return {Z, z, sig, s};
}

bool is_involutive(const SymmetryMatrix& s) {
  SMat sq = s.mat * s.mat;
  const Scalar c = sq(0, 0);
  return sq == c * SMat::identity(sq.rows());
}

Scalar hermitian_form(const Vec& u, const Vec& v, const Signature& sig) {
  const SMat H = hermitian_form_matrix(sig);
  if (u.size() != H.rows() || v.size() != H.rows()) throw DimensionError("vectors must have length n+2");
  Scalar m;
  for (std::size_t j = 0; j < u.size(); ++j)
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!H(j, k).is_zero()) m += H(j, k) * u[j] * v[k].conj();
  return m;
}

bool same_line(const Vec& u, const Vec& w) {
  if (u.size() != w.size()) throw DimensionError("vectors must have equal length");
  for (std::size_t j = 0; j < u.size(); ++j)
    for (std::size_t k = j + 1; k < u.size(); ++k)
      if (u[j] * w[k] != u[k] * w[j]) return false;
  return true;
}

namespace {

Vec e0(std::size_t N) { return unit_vector(N, 0); }

}  // namespace

void validate_pair(const NullLinePair& pair, const Signature& sig) {
  sig.validate();
  const std::size_t N = sig.size();
  if (pair.u.size() != N || pair.v.size() != N) throw std::invalid_argument("u and v must have length n+2");
  if (is_zero(pair.u) || is_zero(pair.v)) throw std::invalid_argument("u and v must be non-zero");
  if (!hermitian_form(pair.u, pair.u, sig).is_zero()) throw std::invalid_argument("u is not null for m");
  if (!hermitian_form(pair.v, pair.v, sig).is_zero()) throw std::invalid_argument("v is not null for m");
  if (same_line(pair.u, pair.v)) throw std::invalid_argument("u and v span the same line");
  if (same_line(pair.u, e0(N))) throw std::invalid_argument("u is proportional to e0");
  if (same_line(pair.v, e0(N))) throw std::invalid_argument("v is proportional to e0");
}

std::string to_string(OrbitCase c) {
  switch (c) {
    case OrbitCase::NonIsotropicPair: return "NonIsotropicPair";
    case OrbitCase::Case1: return "Case1";
    case OrbitCase::Case2: return "Case2";
    case OrbitCase::Case3: return "Case3";
    case OrbitCase::Case4: return "Case4";
  }
  return "?";
}

std::string to_string(SymmetryMode m) { return m == SymmetryMode::Preserve ? "preserve" : "swap"; }

OrbitCase classify_pair(const NullLinePair& pair, const Signature& sig) {
  validate_pair(pair, sig);
  const std::size_t N = sig.size();
  if (!hermitian_form(pair.u, pair.v, sig).is_zero()) return OrbitCase::NonIsotropicPair;
  bool zu = hermitian_form(e0(N), pair.u, sig).is_zero();
  bool zv = hermitian_form(e0(N), pair.v, sig).is_zero();
  if (!zu && !zv) return OrbitCase::Case1;
  if (zu != zv) return OrbitCase::Case2;
  return rank(from_columns({pair.u, pair.v, e0(N)}, N)) == 2 ? OrbitCase::Case3 : OrbitCase::Case4;
}

namespace {

// Affine conditions on (a, b, z) for s_{Z,z} src to lie on the line of dst,
// or nullopt when no parameter works.
std::optional<std::vector<AffineForm>> line_constraint(const Vec& src, const Vec& dst, const Signature& sig) {
  const std::size_t n = sig.n(), last = n + 1, m = 2 * n + 1;
  std::vector<AffineForm> eqs;
  auto fix = [&](std::size_t idx, const Scalar& value) {
    AffineForm f{Vec(m), -value};
    f.coeffs[idx] = Scalar(1);
    eqs.push_back(std::move(f));
  };

  if (!src[last].is_zero()) {
    // Last coordinate of s src is -src_last, which pins the scalar.
    if (dst[last].is_zero()) return std::nullopt;
    const Scalar lambda = -src[last] / dst[last];
    Vec Z(n);
    for (std::size_t k = 0; k < n; ++k) {
      Scalar zc = (src[k + 1] - lambda * dst[k + 1]) / (Scalar(sig.I(k)) * src[last]);
      Z[k] = zc.conj();
    }
    Scalar zIz, zu;
    for (std::size_t k = 0; k < n; ++k) {
      zIz += Z[k] * Scalar(sig.I(k)) * Z[k].conj();
      zu += Z[k] * src[k + 1];
    }
    Scalar iz = (lambda * dst[0] + src[0] + zu) / src[last] - Scalar(Rational(1, 2)) * zIz;
    if (!iz.re().is_zero()) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
      fix(k, Z[k].re());
      fix(n + k, Z[k].im());
    }
    fix(2 * n, iz.im());
    return eqs;
  }

  // src_last = 0: z drops out and the middle block is untouched.
  if (!dst[last].is_zero()) return std::nullopt;
  std::size_t j = 1;
  while (j <= n && src[j].is_zero()) ++j;
  if (j > n || dst[j].is_zero()) return std::nullopt;
  const Scalar lambda = src[j] / dst[j];
  for (std::size_t k = 1; k <= n; ++k)
    if (src[k] != lambda * dst[k]) return std::nullopt;
  // sum_k Z_k src_k = -src_0 - lambda dst_0
  const Scalar rhs = -src[0] - lambda * dst[0];
  AffineForm re_eq{Vec(m), -rhs.re()};
  AffineForm im_eq{Vec(m), -rhs.im()};
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar ur = src[k + 1].re(), ui = src[k + 1].im();
    re_eq.coeffs[k] = ur;
    re_eq.coeffs[n + k] = -ui;
    im_eq.coeffs[k] = ui;
    im_eq.coeffs[n + k] = ur;
  }
  eqs.push_back(std::move(re_eq));
  eqs.push_back(std::move(im_eq));
  return eqs;
}

}  // namespace

AffineSpace find_symmetries(const NullLinePair& pair, SymmetryMode mode, const Signature& sig) {
  validate_pair(pair, sig);
  const std::size_t m = 2 * sig.n() + 1;
  const Vec& target_u = mode == SymmetryMode::Preserve ? pair.u : pair.v;
  const Vec& target_v = mode == SymmetryMode::Preserve ? pair.v : pair.u;
  auto cu = line_constraint(pair.u, target_u, sig);
  auto cv = line_constraint(pair.v, target_v, sig);
  if (!cu || !cv) {
    AffineSpace empty;
    empty.ambient = m;
    return empty;
  }
  std::vector<AffineForm> eqs = *cu;
  eqs.insert(eqs.end(), cv->begin(), cv->end());
  return solve_affine(eqs, m);
}

void split_parameters(const Vec& point, std::size_t n, Vec& Z, Scalar& z) {
  if (point.size() != 2 * n + 1) throw DimensionError("parameter vector must have length 2n+1");
  Z.assign(n, Scalar());
  for (std::size_t k = 0; k < n; ++k) Z[k] = point[k] + Scalar::i() * point[n + k];
  z = point[2 * n];
}

bool verify_symmetry_mode(const SymmetryMatrix& s, const NullLinePair& pair, SymmetryMode mode) {
  const Vec su = mat_vec(s.mat, pair.u);
  const Vec sv = mat_vec(s.mat, pair.v);
  if (mode == SymmetryMode::Preserve) return same_line(su, pair.u) && same_line(sv, pair.v);
  return same_line(su, pair.v) && same_line(sv, pair.u);
}

std::vector<std::string> parameter_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k) names.push_back("a" + std::to_string(k));
  for (std::size_t k = 1; k <= n; ++k) names.push_back("b" + std::to_string(k));
  names.push_back("z");
  return names;
}

std::optional<Vec> unsound_point(const AffineSpace& set, const NullLinePair& pair, SymmetryMode mode, const Signature& sig) {
  if (set.empty) return std::nullopt;
  std::vector<Vec> points{set.particular};
  for (const auto& d : set.directions) {
    points.push_back(set.particular + d);
    points.push_back(set.particular - d);
  }
  for (const auto& p : points) {
    Vec Z;
    Scalar z;
    split_parameters(p, sig.n(), Z, z);
    try {
      if (!verify_symmetry_mode(make_symmetry(Z, z, sig), pair, mode)) return p;
    } catch (const std::exception&) {
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace crsym
