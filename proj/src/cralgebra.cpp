#include "crsym/cralgebra.hpp"

#include <algorithm>
#include <set>

namespace crsym {

namespace {

using PVec = std::vector<Poly>;

Vec conj_vec(const Vec& v) {
  Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].conj();
  return out;
}

Vec re_vec(const Vec& v) {
  Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].re();
  return out;
}

Vec im_vec(const Vec& v) {
  Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].im();
  return out;
}

bool is_real_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_real(); });
}

std::size_t span_rank(const std::vector<Vec>& vs, std::size_t dim) {
  return vs.empty() ? 0 : rank(from_columns(vs, dim));
}

// Reduced row echelon basis of the span; canonical for a given subspace.
std::vector<Vec> canonical_basis(const std::vector<Vec>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  SMat rows(vs.size(), dim);
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) rows(r, c) = vs[r][c];
  Rref rr = rref(rows);
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    Vec v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = rr.m(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

// Some solution of m x = b (free variables set to zero), if one exists.
std::optional<Vec> solve_any(const SMat& m, const Vec& b) {
  const std::size_t nc = m.cols();
  SMat aug(m.rows(), nc + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < nc; ++c) aug(r, c) = m(r, c);
    aug(r, nc) = b[r];
  }
  Rref rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == nc) return std::nullopt;
  Vec x(nc);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = rr.m(r, nc);
  return x;
}

// Vectors of `extra` extending the independent family `base`.
std::vector<Vec> extend_basis(const std::vector<Vec>& base, const std::vector<Vec>& extra, std::size_t dim) {
  std::vector<Vec> all = base, out;
  for (const auto& v : extra) {
    all.push_back(v);
    if (span_rank(all, dim) == all.size())
      out.push_back(v);
    else
      all.pop_back();
  }
  return out;
}

// Coordinate along T of v in the basis (H_basis, T).
class TransversalProjection {
 public:
  TransversalProjection(const std::vector<Vec>& H_basis, const Vec& T, std::size_t dim) {
    std::vector<Vec> cols = H_basis;
    cols.push_back(T);
    auto inv = inverse(from_columns(cols, dim));
    if (!inv) throw CrAlgebraError("transversal element lies in H");
    inv_ = *inv;
  }
  Scalar operator()(const Vec& v) const { return mat_vec(inv_, v).back(); }

 private:
  SMat inv_;
};

std::vector<SMat> skew_hermitian_basis(std::size_t n) {
  const Scalar iu = Scalar::i();
  std::vector<SMat> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(unit(n, k, k, iu));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      out.push_back(unit(n, j, k) - unit(n, k, j));
      out.push_back(unit(n, j, k, iu) + unit(n, k, j, iu));
    }
  return out;
}

// Parity under nu: 0 on T and l, 1 on the xi's.
std::vector<int> frame_parity(const AdaptedFrame& frame) {
  std::vector<int> par(frame.k.dim(), 0);
  for (std::size_t b = 1; b <= 2 * frame.sig.n(); ++b) par[b] = 1;
  return par;
}

PVec poly_bracket(const LieAlg& k, const PVec& u, const PVec& v) {
  const std::size_t n = k.dim();
  PVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || v[j].is_zero()) continue;
      const Poly f = u[i] * v[j];
      for (std::size_t m = 0; m < n; ++m)
        if (sgn(k.c[i][j][m]) != 0) out[m] += Poly(Scalar(k.c[i][j][m])) * f;
    }
  }
  return out;
}

void push_re_im(std::vector<Poly>& eqs, const Poly& p) {
  Poly a = p.re(), b = p.im();
  if (!a.is_zero()) eqs.push_back(std::move(a));
  if (!b.is_zero()) eqs.push_back(std::move(b));
}

struct Elimination {
  bool consistent = true;
  std::map<std::string, Poly> solved;
  std::vector<Poly> residual;
};

// Repeatedly solves for a variable occurring only linearly, with a constant
// coefficient, in some equation.
Elimination eliminate(std::vector<Poly> eqs) {
  Elimination out;
  for (;;) {
    std::vector<Poly> kept;
    for (auto& e : eqs) {
      if (e.is_zero()) continue;
      if (e.is_constant()) {
        out.consistent = false;
        out.residual = {e};
        return out;
      }
      kept.push_back(std::move(e));
    }
    eqs = std::move(kept);

    std::string var;
    Poly expr;
    for (const auto& e : eqs) {
      for (const auto& v : e.variables()) {
        bool only_linear = true;
        for (const auto& [mono, coeff] : e.terms())
          for (const auto& [name, pow] : mono)
            if (name == v && !(pow == 1 && mono.size() == 1)) only_linear = false;
        if (!only_linear) continue;
        const Scalar c = e.linear_coefficient(v);
        expr = Poly(-c.inv()) * (e - Poly(c) * Poly::var(v));
        var = v;
        break;
      }
      if (!var.empty()) break;
    }
    if (var.empty()) break;
    const std::map<std::string, Poly> step{{var, expr}};
    for (auto& [name, value] : out.solved) value = value.substitute(step);
    out.solved[var] = expr;
    for (auto& e : eqs) e = e.substitute(step);
  }
  out.residual = std::move(eqs);
  return out;
}

std::string frame_var(std::size_t r, std::size_t c) { return "b" + std::to_string(r) + std::to_string(c); }
std::string aux_var(std::size_t a, std::size_t b) { return "m" + std::to_string(a) + std::to_string(b); }

// Equations for the frame B = (T, xi_1, J xi_1, ...) with l = 0:
// [xi_a, xi_b] = omega_ab T, [T, xi_a] = sum_b m_ab xi_b, xi_j + i J xi_j in q.
std::vector<Poly> search_equations(const CrAlgebra& cr, const Signature& sig, bool free_q) {
  const std::size_t dim = cr.k.dim(), m = 2 * sig.n();
  std::vector<PVec> cols(dim, PVec(dim));
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) cols[c][r] = Poly::var(frame_var(r, c));
  std::vector<Poly> eqs;
  for (std::size_t a = 1; a <= m; ++a)
    for (std::size_t b = a + 1; b <= m; ++b) {
      Scalar omega;
      if (a % 2 == 1 && b == a + 1) omega = Scalar(-2 * sig.I((a - 1) / 2));
      PVec br = poly_bracket(cr.k, cols[a], cols[b]);
      for (std::size_t r = 0; r < dim; ++r) push_re_im(eqs, br[r] - Poly(omega) * cols[0][r]);
    }
  for (std::size_t a = 1; a <= m; ++a) {
    PVec br = poly_bracket(cr.k, cols[0], cols[a]);
    for (std::size_t b = 1; b <= m; ++b)
      for (std::size_t r = 0; r < dim; ++r) br[r] -= Poly::var(aux_var(a, b)) * cols[b][r];
    for (const auto& e : br) push_re_im(eqs, e);
  }
  if (!free_q) {
    SMat Qt(cr.q_basis.size(), dim);
    for (std::size_t r = 0; r < cr.q_basis.size(); ++r)
      for (std::size_t c = 0; c < dim; ++c) Qt(r, c) = cr.q_basis[r][c];
    const Poly iu(Scalar::i());
    for (const auto& phi : kernel(Qt))
      for (std::size_t j = 0; j < sig.n(); ++j) {
        Poly e;
        for (std::size_t r = 0; r < dim; ++r)
          if (!phi[r].is_zero()) e += Poly(phi[r]) * (cols[1 + 2 * j][r] + iu * cols[2 + 2 * j][r]);
        push_re_im(eqs, e);
      }
  }
  return eqs;
}

}  // namespace

Vec CrAlgebra::bracket(const Vec& u, const Vec& v) const { return k.bracket(u, v); }

void CrAlgebra::validate() const {
  validate_radicand(d);
  k.validate();
  const std::size_t dim = k.dim();
  if (q_basis.empty()) throw CrAlgebraError("q must be nonzero");
  for (const auto& v : q_basis)
    if (v.size() != dim) throw CrAlgebraError("q basis vector has wrong length");
  const std::size_t r = span_rank(q_basis, dim);
  if (r != q_basis.size()) throw CrAlgebraError("q basis vectors are linearly dependent");
  for (std::size_t i = 0; i < q_basis.size(); ++i)
    for (std::size_t j = i + 1; j < q_basis.size(); ++j) {
      std::vector<Vec> with = q_basis;
      with.push_back(bracket(q_basis[i], q_basis[j]));
      if (span_rank(with, dim) != r) throw CrAlgebraError("q is not a subalgebra of the complexification");
    }
}

LeviData derive_l_and_H(const CrAlgebra& cr) {
  cr.validate();
  const std::size_t dim = cr.k.dim(), m = cr.q_basis.size();
  std::vector<Vec> qbar;
  for (const auto& v : cr.q_basis) qbar.push_back(conj_vec(v));

  // q cap conj(q) from the kernel of [Q | -conj(Q)].
  SMat QQ(dim, 2 * m);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < dim; ++r) {
      QQ(r, c) = cr.q_basis[c][r];
      QQ(r, m + c) = -qbar[c][r];
    }
  std::vector<Vec> real_points;
  for (const auto& kv : kernel(QQ)) {
    Vec w(dim);
    for (std::size_t c = 0; c < m; ++c)
      if (!kv[c].is_zero()) w = w + kv[c] * cr.q_basis[c];
    real_points.push_back(re_vec(w));
    real_points.push_back(im_vec(w));
  }
  LeviData out;
  out.l_basis = canonical_basis(real_points, dim);

  std::vector<Vec> h_span;
  for (const auto& v : cr.q_basis) {
    h_span.push_back(re_vec(v));
    h_span.push_back(im_vec(v));
  }
  out.H_basis = canonical_basis(h_span, dim);
  if (out.H_basis.size() + 1 != dim)
    throw CrAlgebraError("H has real codimension " + std::to_string(dim - out.H_basis.size()) + ", expected 1");
  const std::size_t twice_n = out.H_basis.size() - out.l_basis.size();
  if (twice_n == 0 || twice_n % 2 != 0) throw CrAlgebraError("H/l must have positive even dimension");
  out.n = twice_n / 2;

  Vec T;
  for (std::size_t k = 0; k < dim && T.empty(); ++k) {
    Vec e = unit_vector(dim, k);
    if (!extend_basis(out.H_basis, {e}, dim).empty()) T = e;
  }
  const TransversalProjection pi(out.H_basis, T, dim);
  const auto reps = extend_basis(out.l_basis, out.H_basis, dim);
  SMat form(twice_n, twice_n);
  for (std::size_t a = 0; a < twice_n; ++a)
    for (std::size_t b = 0; b < twice_n; ++b) form(a, b) = pi(cr.bracket(reps[a], apply_J(cr, reps[b])));
  if (form != form.transpose()) throw CrAlgebraError("Levi form is not symmetric; q is not compatible with a CR structure");
  Inertia in = inertia(form);
  if (in.zero != 0) throw CrAlgebraError("Levi form is degenerate");
  out.levi_signature = {std::min(in.pos, in.neg) / 2, std::max(in.pos, in.neg) / 2};
  return out;
}

Vec apply_J(const CrAlgebra& cr, const Vec& xi) {
  const std::size_t dim = cr.k.dim(), m = cr.q_basis.size();
  SMat QQ(dim, 2 * m);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < dim; ++r) {
      QQ(r, c) = cr.q_basis[c][r];
      QQ(r, m + c) = cr.q_basis[c][r].conj();
    }
  auto sol = solve_any(QQ, xi);
  if (!sol) throw CrAlgebraError("vector does not lie in H");
  const Scalar iu = Scalar::i();
  Vec out(dim);
  for (std::size_t c = 0; c < m; ++c) {
    if (!(*sol)[c].is_zero()) out = out + (-iu * (*sol)[c]) * cr.q_basis[c];
    if (!(*sol)[m + c].is_zero()) out = out + (iu * (*sol)[m + c]) * conj_vec(cr.q_basis[c]);
  }
  return re_vec(out);
}

AdaptedFrame adapted_frame(const CrAlgebra& cr, const LeviData& levi, const BasisChoice& choice) {
  const std::size_t dim = cr.k.dim(), n = levi.n;
  if (choice.complement.size() != dim || !is_real_vec(choice.complement))
    throw CrAlgebraError("complement must be a real vector of length dim k");
  if (choice.representatives.size() != n)
    throw CrAlgebraError("expected " + std::to_string(n) + " representatives, got " + std::to_string(choice.representatives.size()));
  if (!choice.j_images.empty() && choice.j_images.size() != n) throw CrAlgebraError("one J image per representative required");

  AdaptedFrame frame;
  frame.basis.push_back(choice.complement);
  std::vector<std::string> names{"x"};
  for (std::size_t j = 0; j < n; ++j) {
    const Vec& xi = choice.representatives[j];
    if (xi.size() != dim || !is_real_vec(xi)) throw CrAlgebraError("representatives must be real vectors of length dim k");
    if (!extend_basis(levi.H_basis, {xi}, dim).empty()) throw CrAlgebraError("representative " + std::to_string(j + 1) + " is not in H");
    Vec jxi = apply_J(cr, xi);
    if (!choice.j_images.empty()) {
      const Vec& given = choice.j_images[j];
      if (given.size() != dim) throw CrAlgebraError("J image has wrong length");
      std::vector<Vec> span = levi.l_basis;
      span.push_back(given - jxi);
      if (span_rank(span, dim) != levi.l_basis.size()) throw CrAlgebraError("J image " + std::to_string(j + 1) + " differs from J(xi) modulo l");
      jxi = given;
    }
    frame.basis.push_back(xi);
    frame.basis.push_back(jxi);
    names.push_back("X" + std::to_string(2 * j + 1));
    names.push_back("X" + std::to_string(2 * j + 2));
  }
  for (std::size_t j = 0; j < levi.l_basis.size(); ++j) {
    frame.l_indices.push_back(frame.basis.size());
    frame.basis.push_back(levi.l_basis[j]);
    names.push_back("l" + std::to_string(j + 1));
  }
  if (span_rank(frame.basis, dim) != dim) throw CrAlgebraError("complement, representatives and l do not span k");
  frame.k = cr.k.change_basis(frame.basis, names);

  std::vector<int> I(n);
  for (std::size_t a = 1; a <= 2 * n; ++a)
    for (std::size_t b = a + 1; b <= 2 * n; ++b) {
      const Rational& w = frame.k.c[a][b][0];
      if (a % 2 == 1 && b == a + 1) {
        if (w != 2 && w != -2)
          throw CrAlgebraError("Levi form is not normalized: [" + names[a] + ", " + names[b] + "] has T-coefficient " + w.get_str() + ", expected +-2");
        I[(a - 1) / 2] = w > 0 ? -1 : 1;
      } else if (sgn(w) != 0) {
        throw CrAlgebraError("Levi form is not normalized: [" + names[a] + ", " + names[b] + "] has nonzero T-coefficient");
      }
    }
  const std::size_t np = std::count(I.begin(), I.end(), 1), nm = n - np;
  auto matches = [&](int first) {
    std::size_t head = first == 1 ? np : nm;
    for (std::size_t k = 0; k < n; ++k)
      if (I[k] != (k < head ? first : -first)) return false;
    return true;
  };
  if (matches(1) && np <= nm)
    frame.sig = Signature{static_cast<int>(np), static_cast<int>(nm), 1};
  else if (matches(-1) && nm <= np)
    frame.sig = Signature{static_cast<int>(nm), static_cast<int>(np), -1};
  else
    throw CrAlgebraError("representatives must be ordered so that the Levi signs form a block pattern with the shorter block first");
  return frame;
}

std::string to_string(Injectivity v) { return v == Injectivity::Injective ? "Injective" : "NotInjectiveHenceFlat"; }

InjectivityResult injectivity_shortcut(const AdaptedFrame& frame) {
  const Signature& sig = frame.sig;
  const std::size_t n = sig.n();
  const Scalar iu = Scalar::i();
  InjectivityResult res;
  std::vector<Vec> real_images;
  for (auto l : frame.l_indices) {
    const Scalar c(frame.k.c[l][0][0]);
    SMat Bc(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        auto B = [&](std::size_t row, std::size_t col) { return Scalar(frame.k.c[l][1 + col][1 + row]); };
        const std::size_t R = 2 * r, C = 2 * c2;
        if (B(R, C + 1) != -B(R + 1, C) || B(R + 1, C + 1) != B(R, C))
          throw CrAlgebraError("l does not act complex-linearly on H/l in the chosen basis");
        Bc(r, c2) = B(R, C) + iu * B(R + 1, C);
      }
    const Scalar rr = -c / Scalar(2);
    const Scalar tr = Bc.trace();
    if (!(Scalar(static_cast<long>(n)) * rr + tr.re()).is_zero())
      throw CrAlgebraError("action of l is not in csu(p,q): trace condition fails");
    const Scalar s = -tr.im() / Scalar(static_cast<long>(n + 2));
    const Scalar a = rr + iu * s;
    SMat A = Bc;
    for (std::size_t k = 0; k < n; ++k) A(k, k) += a;
    auto g = GradedParts<Scalar>::zero(n);
    g.a = a;
    g.A = A;
    SMat img;
    try {
      img = assemble(g, sig);
    } catch (const MembershipError& e) {
      throw CrAlgebraError(std::string("action of l is not in csu(p,q): ") + e.what());
    }
    real_images.push_back(realify(img));
    res.images.push_back(std::move(img));
  }
  res.kernel_dimension = frame.l_indices.size() - span_rank(real_images, real_images.empty() ? 0 : real_images[0].size());
  res.verdict = res.kernel_dimension == 0 ? Injectivity::Injective : Injectivity::NotInjectiveHenceFlat;
  return res;
}

Extension make_skeleton(const AdaptedFrame& frame, const std::vector<SMat>& l_alpha, int d) {
  const Signature& sig = frame.sig;
  const std::size_t n = sig.n();
  if (l_alpha.size() != frame.l_indices.size()) throw CrAlgebraError("need one alpha value per l basis vector");
  Extension ext;
  ext.d = d;
  ext.sig = sig;
  ext.k = frame.k;
  ext.l_indices = frame.l_indices;
  const Poly iu(Scalar::i());

  ext.unknowns = {"a", "r"};
  const auto K = skew_hermitian_basis(n);
  PMat Iq(n, n);
  for (std::size_t k = 0; k < n; ++k) Iq(k, k) = Poly(sig.I(k));
  auto gT = GradedParts<Poly>::zero(n);
  gT.x = Poly(1);
  gT.a = iu * Poly::var("a");
  gT.z = Poly::var("r");
  for (std::size_t j = 0; j < K.size(); ++j) {
    const std::string name = "k" + std::to_string(j + 1);
    ext.unknowns.push_back(name);
    gT.A += Poly::var(name) * (Iq * to_poly(K[j]));
  }
  ext.alpha.push_back(assemble(gT, sig, false));
  ext.constraints.push_back(Poly(2) * gT.a + gT.A.trace());

  for (std::size_t b = 1; b <= 2 * n; ++b) {
    auto g = GradedParts<Poly>::zero(n);
    g.X[(b - 1) / 2] = b % 2 == 1 ? Poly(1) : iu;
    for (std::size_t k = 0; k < n; ++k) {
      const std::string s = "s" + std::to_string(b) + "_" + std::to_string(k + 1);
      const std::string t = "t" + std::to_string(b) + "_" + std::to_string(k + 1);
      ext.unknowns.push_back(s);
      ext.unknowns.push_back(t);
      g.Z[k] = Poly::var(s) + iu * Poly::var(t);
    }
    ext.alpha.push_back(assemble(g, sig, false));
  }
  for (const auto& m : l_alpha) {
    if (m.rows() != sig.size() || m.cols() != sig.size()) throw CrAlgebraError("alpha on l has wrong size");
    ext.alpha.push_back(to_poly(m));
  }
  return ext;
}

NuTestResult nu_automorphism_test(const AdaptedFrame& frame, const Extension& skeleton) {
  NuTestResult res;
  const auto par = frame_parity(frame);
  const std::size_t dim = frame.k.dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const int p = (par[i] + par[j]) % 2;
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(frame.k.c[i][j][k]) != 0 && par[k] != p) {
          res.bracket_route = false;
          res.violations.push_back("[" + frame.k.names[i] + ", " + frame.k.names[j] + "] has a " + frame.k.names[k] + " component");
        }
      const PMat t = tau(skeleton, i, j);
      for (int g = -2; g <= 2; ++g) {
        if (((g % 2) + 2) % 2 == p) continue;
        if (!grade_mask(t, g, skeleton.sig).is_zero()) {
          res.tau_route = false;
          res.violations.push_back("tau(" + frame.k.names[i] + ", " + frame.k.names[j] + ") has a grade " + std::to_string(g) + " component");
        }
      }
    }
  return res;
}

NuTestResult nu_automorphism_test(const CrAlgebra& cr, const BasisChoice& choice) {
  const LeviData levi = derive_l_and_H(cr);
  const AdaptedFrame frame = adapted_frame(cr, levi, choice);
  std::vector<SMat> l_alpha = choice.l_alpha;
  if (l_alpha.empty()) l_alpha = injectivity_shortcut(frame).images;
  return nu_automorphism_test(frame, make_skeleton(frame, l_alpha, cr.d));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Symmetric: return "Symmetric";
    case Verdict::NotSymmetricForChoice: return "NotSymmetricForChoice";
    case Verdict::FlatLocallySymmetric: return "FlatLocallySymmetric";
  }
  return "?";
}

CrReport check_symmetric(const CrAlgebra& cr, const BasisChoice& choice) {
  CrReport rep;
  rep.levi = derive_l_and_H(cr);
  const AdaptedFrame frame = adapted_frame(cr, rep.levi, choice);
  rep.sig = frame.sig;
  rep.injectivity = injectivity_shortcut(frame);
  rep.not_checked = {"nu integrates to an automorphism of the Lie group K (algebra level only)",
                     "L lies in the fixed-point set of nu (algebra level only)"};

  std::vector<SMat> l_alpha = choice.l_alpha.empty() ? rep.injectivity.images : choice.l_alpha;
  Extension skeleton = make_skeleton(frame, l_alpha, cr.d);
  rep.nu = nu_automorphism_test(frame, skeleton);
  const bool flat = rep.injectivity.verdict == Injectivity::NotInjectiveHenceFlat;

  const std::size_t dim = frame.k.dim(), n = frame.sig.n();
  std::vector<Vec> h_basis{unit_vector(dim, 0)}, m_basis;
  for (auto l : frame.l_indices) h_basis.push_back(unit_vector(dim, l));
  for (std::size_t b = 1; b <= 2 * n; ++b) m_basis.push_back(unit_vector(dim, b));

  if (!flat && !rep.nu.ok()) {
    rep.verdict = Verdict::NotSymmetricForChoice;
    rep.notes.push_back("nu is not a Lie algebra automorphism for this choice");
    return rep;
  }
  if (flat) {
    rep.verdict = Verdict::FlatLocallySymmetric;
    rep.notes.push_back("l -> csu(p,q) has kernel of dimension " + std::to_string(rep.injectivity.kernel_dimension) +
                        "; the geometry is flat");
    if (!rep.nu.ok()) rep.notes.push_back("nu is not an automorphism of k for this choice; symmetries lie outside K");
  }
  if (!choice.flat_alpha.empty()) {
    if (choice.flat_alpha.size() != dim) throw CrAlgebraError("flat alpha needs one matrix per basis vector of k");
    Extension ext;
    ext.d = cr.d;
    ext.sig = choice.flat_signature.value_or(frame.sig);
    ext.k = frame.k;
    ext.l_indices = frame.l_indices;
    for (const auto& v : frame.basis) {
      SMat m(ext.sig.size(), ext.sig.size());
      for (std::size_t i = 0; i < dim; ++i)
        if (!v[i].is_zero()) m += v[i] * choice.flat_alpha[i];
      ext.alpha.push_back(to_poly(m));
    }
    StructureReport st = check_structure(ext);
    if (!st.ok()) throw CrAlgebraError("supplied flat alpha is not an extension: " + st.issues.front());
    if (!is_flat(ext)) throw CrAlgebraError("supplied flat alpha is not a homomorphism");
    rep.notes.push_back("flat: alpha supplied as a homomorphism, curvature vanishes");
    const SymmetricFormReport form = check_symmetric_form(ext, h_basis, m_basis);
    rep.notes.push_back(std::string("supplied alpha in symmetric form: ") + (form.ok() ? "yes" : "no"));
    if (!flat) rep.verdict = Verdict::Symmetric;
    rep.extension = std::move(ext);
    return rep;
  }
  if (flat) return rep;

  NormalizationResult solved;
  try {
    solved = solve_normalization(skeleton);
  } catch (const NormalizationError& e) {
    if (e.kernel_dimension > 0) throw;
    rep.verdict = Verdict::NotSymmetricForChoice;
    rep.notes.push_back(e.what());
    return rep;
  }
  const SymmetricFormReport form = check_symmetric_form(solved.ext, h_basis, m_basis);
  if (!form.ok()) throw std::logic_error("normal extension is not in symmetric form");
  rep.verdict = Verdict::Symmetric;
  rep.notes.push_back("normal extension solved from " + std::to_string(solved.equations) + " equations");
  rep.extension = std::move(solved.ext);
  return rep;
}

VarietyMatch verify_variety_membership(const SMat& B) {
  if (B.rows() != 3 || B.cols() != 3) throw DimensionError("variety check needs a 3x3 matrix");
  if (!inverse(B)) throw std::invalid_argument("variety check needs an invertible matrix");
  VarietyMatch out;
  out.params = {B(2, 1), B(1, 2), B(2, 2), B(1, 1), B(0, 1), B(1, 0)};
  const auto& p = out.params;
  const Scalar half(Rational(1, 2));
  out.member = B(2, 0).is_zero() && B(0, 0) == half * (p[0] * p[1] - p[2] * p[3]) &&
               B(0, 2) == half * (p[4] * p[2] - Scalar(2) * p[5]);
  for (const auto& s : p)
    if (!s.is_real()) out.member = false;
  return out;
}

bool SearchGauge::contains(const SMat& B) const {
  if (!consistent) return false;
  std::map<std::string, Poly> subs;
  for (std::size_t r = 0; r < B.rows(); ++r)
    for (std::size_t c = 0; c < B.cols(); ++c) subs[frame_var(r, c)] = Poly(B(r, c));
  std::vector<AffineForm> forms;
  for (const auto& e : equations) {
    Poly p = e.substitute(subs);
    if (p.degree() > 1) return false;
    AffineForm f;
    for (const auto& a : aux_unknowns) f.coeffs.push_back(p.linear_coefficient(a));
    f.constant = p.constant_term();
    forms.push_back(std::move(f));
  }
  return !solve_affine(forms, aux_unknowns.size()).empty;
}

SearchResult search_symmetric(const CrAlgebra& cr, const SearchOptions& opts) {
  const LeviData levi = derive_l_and_H(cr);
  const std::size_t dim = cr.k.dim();
  if (!levi.l_basis.empty()) throw CrAlgebraError("search mode supports only l = 0");
  if (dim > 4) throw CrAlgebraError("search mode supports only dim k <= 4");
  const std::size_t n = levi.n, m = 2 * n;

  SearchResult res;
  for (int i_sign : {1, -1}) {
    const Signature sig{0, static_cast<int>(n), i_sign};
    SearchGauge g;
    g.i_sign = i_sign;
    for (std::size_t c = 0; c < dim; ++c)
      for (std::size_t r = 0; r < dim; ++r) g.frame_unknowns.push_back(frame_var(r, c));
    for (std::size_t a = 1; a <= m; ++a)
      for (std::size_t b = 1; b <= m; ++b) g.aux_unknowns.push_back(aux_var(a, b));
    g.equations = search_equations(cr, sig, opts.free_q);
    Elimination el = eliminate(g.equations);
    g.consistent = el.consistent;
    g.eliminated = el.solved;
    g.residual = el.residual;
    if (g.consistent)
      for (const auto& v : g.frame_unknowns)
        if (!g.eliminated.count(v)) g.free_unknowns.push_back(v);
    res.gauges.push_back(std::move(g));
  }
  res.globally_not_symmetric = std::none_of(res.gauges.begin(), res.gauges.end(), [](const SearchGauge& g) { return g.consistent; });

  for (const auto& g : res.gauges) {
    if (!g.consistent) continue;
    const std::size_t nf = g.free_unknowns.size(), ng = opts.grid.size();
    std::vector<std::size_t> idx(nf, 0);
    for (std::size_t count = 0; count < opts.max_samples; ++count) {
      std::map<std::string, Poly> subs;
      for (std::size_t f = 0; f < nf; ++f) subs[g.free_unknowns[f]] = Poly(opts.grid[idx[f]]);
      std::vector<Poly> eqs;
      for (const auto& e : g.equations) eqs.push_back(e.substitute(subs));
      Elimination el = eliminate(eqs);
      bool ok = el.consistent && el.residual.empty();
      SMat B(dim, dim);
      for (std::size_t c = 0; c < dim && ok; ++c)
        for (std::size_t r = 0; r < dim && ok; ++r) {
          const std::string v = frame_var(r, c);
          Poly val = subs.count(v) ? subs.at(v) : (el.solved.count(v) ? el.solved.at(v) : Poly::var(v));
          if (!val.is_constant())
            ok = false;
          else
            B(r, c) = val.to_scalar();
        }
      if (ok && inverse(B)) {
        const bool seen = std::any_of(res.samples.begin(), res.samples.end(), [&](const SearchSample& s) { return s.B == B; });
        if (!seen) {
          CrAlgebra target = opts.free_q ? cr_algebra_from_frame(cr.k, B, cr.d) : cr;
          SearchSample sample{B, Verdict::NotSymmetricForChoice, std::nullopt};
          try {
            CrReport rep = check_symmetric(target, choice_from_frame(B));
            sample.verdict = rep.verdict;
            sample.extension = std::move(rep.extension);
            res.samples.push_back(std::move(sample));
          } catch (const std::exception&) {
          }
        }
      }
      std::size_t f = 0;
      while (f < nf && ++idx[f] == ng) idx[f++] = 0;
      if (f == nf) break;
    }
  }
  return res;
}

CrAlgebra cr_algebra_from_frame(const LieAlg& k, const SMat& B, int d) {
  const std::size_t dim = k.dim();
  if (B.rows() != dim || B.cols() != dim || dim % 2 == 0) throw DimensionError("frame must be a square matrix of odd size dim k");
  CrAlgebra cr;
  cr.d = d;
  cr.k = k;
  const Scalar iu = Scalar::i();
  for (std::size_t j = 1; j + 1 < dim; j += 2) cr.q_basis.push_back(B.column(j) + iu * B.column(j + 1));
  return cr;
}

BasisChoice choice_from_frame(const SMat& B) {
  BasisChoice ch;
  ch.complement = B.column(0);
  for (std::size_t j = 1; j + 1 < B.cols(); j += 2) {
    ch.representatives.push_back(B.column(j));
    ch.j_images.push_back(B.column(j + 1));
  }
  return ch;
}

CrAlgebra cr_algebra_from_extension(const Extension& ext) {
  const Signature& sig = ext.sig;
  const std::size_t dim = ext.k.dim(), n = sig.n(), N = sig.size();
  const Scalar iu = Scalar::i();
  // Target q = p_C + span{X(e_k) + i X(i e_k)} inside su_C.
  std::vector<SMat> target = g0_basis(sig);
  for (const auto& m : pplus_basis(sig)) target.push_back(m);
  const auto xi = gminus_basis(sig);
  for (std::size_t k = 0; k < n; ++k) target.push_back(xi[1 + 2 * k] + iu * xi[2 + 2 * k]);

  SMat sys(N * N, dim + target.size());
  for (std::size_t c = 0; c < dim; ++c) {
    const SMat a = to_scalar(ext.alpha[c]);
    for (std::size_t e = 0; e < N * N; ++e) sys(e, c) = a(e / N, e % N);
  }
  for (std::size_t c = 0; c < target.size(); ++c)
    for (std::size_t e = 0; e < N * N; ++e) sys(e, dim + c) = -target[c](e / N, e % N);
  std::vector<Vec> q;
  for (const auto& v : kernel(sys)) q.push_back(Vec(v.begin(), v.begin() + dim));
  CrAlgebra cr;
  cr.d = ext.d;
  cr.k = ext.k;
  cr.q_basis = canonical_basis(q, dim);
  return cr;
}

}  // namespace crsym
