#include "crsym/extension.hpp"

#include <algorithm>
#include <set>

namespace crsym {

std::vector<std::size_t> Extension::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k.dim(); ++i)
    if (!in_l(i)) out.push_back(i);
  return out;
}

bool Extension::in_l(std::size_t i) const {
  return std::find(l_indices.begin(), l_indices.end(), i) != l_indices.end();
}

bool Extension::has_unknowns() const {
  for (const auto& m : alpha)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_constant()) return true;
  return false;
}

PMat Extension::alpha_of(const Vec& coords) const {
  if (coords.size() != k.dim()) throw DimensionError("coordinate vector has wrong length");
  PMat out(sig.size(), sig.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out += Poly(coords[i]) * alpha[i];
  return out;
}

PMat tau(const Extension& ext, std::size_t i, std::size_t j) {
  PMat t = bracket(ext.alpha[i], ext.alpha[j]);
  for (std::size_t m = 0; m < ext.k.dim(); ++m) {
    const Rational& c = ext.k.c[i][j][m];
    if (sgn(c) != 0) t -= Poly(Scalar(c)) * ext.alpha[m];
  }
  return t;
}

namespace {

bool in_p(const PMat& m, const Signature& sig) {
  return grade_mask(m, -2, sig).is_zero() && grade_mask(m, -1, sig).is_zero();
}

std::string pair_name(const Extension& ext, std::size_t i, std::size_t j) {
  return "(" + ext.k.names[i] + ", " + ext.k.names[j] + ")";
}

// Curvature transported to g_- arguments: kappa(u, v) = tau(abar^-1 u, abar^-1 v).
class Kappa {
 public:
  explicit Kappa(const Extension& ext) : ext_(ext), comp_(ext.complement()) {
    SMat A = alpha_bar(ext);
    if (!A.is_square()) throw ExtensionError("alpha-bar is not square: dim k/l differs from dim g_-");
    auto inv = inverse(A);
    if (!inv) throw ExtensionError("alpha-bar: k/l -> g_- is not invertible");
    A_ = A;
    Ainv_ = *inv;
    const std::size_t m = comp_.size();
    T_.assign(m, std::vector<PMat>(m, PMat(ext.sig.size(), ext.sig.size())));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        T_[a][b] = tau(ext, comp_[a], comp_[b]);
        T_[b][a] = -T_[a][b];
      }
  }

  const SMat& abar() const { return A_; }
  const SMat& abar_inv() const { return Ainv_; }

  PMat operator()(const Vec& u, const Vec& v) const {
    Vec ku = mat_vec(Ainv_, u), kv = mat_vec(Ainv_, v);
    PMat out(ext_.sig.size(), ext_.sig.size());
    for (std::size_t a = 0; a < ku.size(); ++a) {
      if (ku[a].is_zero()) continue;
      for (std::size_t b = 0; b < kv.size(); ++b) {
        if (a == b || kv[b].is_zero()) continue;
        out += Poly(ku[a] * kv[b]) * T_[a][b];
      }
    }
    return out;
  }

 private:
  const Extension& ext_;
  std::vector<std::size_t> comp_;
  SMat A_, Ainv_;
  std::vector<std::vector<PMat>> T_;
};

SMat gminus_matrix(const Vec& coords, const Signature& sig) {
  auto xi = gminus_basis(sig);
  SMat m(sig.size(), sig.size());
  for (std::size_t b = 0; b < xi.size(); ++b)
    if (!coords[b].is_zero()) m += coords[b] * xi[b];
  return m;
}

void push_re_im(std::vector<Poly>& eqs, const PMat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      Poly a = m(r, c).re(), b = m(r, c).im();
      if (!a.is_zero()) eqs.push_back(std::move(a));
      if (!b.is_zero()) eqs.push_back(std::move(b));
    }
}

}  // namespace

StructureReport check_structure(const Extension& ext) {
  StructureReport rep;
  const std::size_t dim = ext.k.dim(), N = ext.sig.size();
  try {
    ext.sig.validate();
    ext.k.validate();
  } catch (const std::exception& e) {
    rep.shapes = false;
    rep.issues.push_back(e.what());
    return rep;
  }
  if (ext.alpha.size() != dim) {
    rep.shapes = false;
    rep.issues.push_back("alpha must have one matrix per basis element of k");
    return rep;
  }
  for (std::size_t i = 0; i < dim; ++i)
    if (ext.alpha[i].rows() != N || ext.alpha[i].cols() != N) {
      rep.shapes = false;
      rep.issues.push_back("alpha(" + ext.k.names[i] + ") has shape " + ext.alpha[i].shape());
    }
  std::set<std::size_t> seen;
  for (auto l : ext.l_indices)
    if (l >= dim || !seen.insert(l).second) {
      rep.shapes = false;
      rep.issues.push_back("invalid or repeated l index " + std::to_string(l));
    }
  if (!rep.shapes) return rep;

  for (std::size_t i = 0; i < dim; ++i)
    if (!is_member(ext.alpha[i], ext.sig)) {
      rep.members = false;
      rep.issues.push_back("alpha(" + ext.k.names[i] + ") is not in su(p+1,q+1)");
    }

  for (auto a : ext.l_indices)
    for (auto b : ext.l_indices)
      for (std::size_t m = 0; m < dim; ++m)
        if (sgn(ext.k.c[a][b][m]) != 0 && !ext.in_l(m)) {
          rep.subalgebra = false;
          rep.issues.push_back("l is not closed: [" + ext.k.names[a] + ", " + ext.k.names[b] + "] leaves l");
        }

  try {
    SMat A = alpha_bar(ext);
    if (!A.is_square() || !inverse(A)) {
      rep.isomorphism = false;
      rep.issues.push_back("alpha-bar: k/l -> su/p is not an isomorphism");
    }
  } catch (const ExtensionError& e) {
    rep.isomorphism = false;
    rep.issues.push_back(e.what());
  }

  for (auto l : ext.l_indices)
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == l) continue;
      if (!tau(ext, l, j).is_zero()) {
        rep.equivariant = false;
        rep.issues.push_back("equivariance fails: tau" + pair_name(ext, l, j) + " != 0");
      }
    }
  return rep;
}

CurvatureTable curvature_table(const Extension& ext) {
  CurvatureTable table;
  for (std::size_t i = 0; i < ext.k.dim(); ++i)
    for (std::size_t j = i + 1; j < ext.k.dim(); ++j) {
      PMat t = tau(ext, i, j);
      bool ok = in_p(t, ext.sig);
      table.push_back({i, j, std::move(t), ok});
    }
  return table;
}

CurvatureTable curvature(const Extension& ext) {
  CurvatureTable table = curvature_table(ext);
  for (const auto& e : table)
    if (!e.in_p)
      throw ExtensionError("curvature value tau" + pair_name(ext, e.i, e.j) + " escapes p: " + to_string(e.value));
  return table;
}

bool is_flat(const Extension& ext) {
  for (const auto& e : curvature_table(ext))
    if (!e.value.is_zero()) return false;
  return true;
}

std::vector<WeylEntry> weyl_component(const Extension& ext) {
  std::vector<WeylEntry> out;
  for (const auto& e : curvature(ext)) out.push_back({e.i, e.j, grade_mask(e.value, 0, ext.sig)});
  return out;
}

bool weyl_is_zero(const Extension& ext) {
  for (const auto& w : weyl_component(ext))
    if (!w.value.is_zero()) return false;
  return true;
}

SMat alpha_bar(const Extension& ext) {
  auto comp = ext.complement();
  const std::size_t m = 2 * ext.sig.n() + 1;
  SMat A(m, comp.size());
  for (std::size_t j = 0; j < comp.size(); ++j) {
    auto coords = gminus_coords(ext.alpha[comp[j]], ext.sig);
    for (std::size_t b = 0; b < m; ++b) {
      if (!coords[b].is_constant())
        throw ExtensionError("g_- part of alpha(" + ext.k.names[comp[j]] + ") contains unknowns");
      A(b, j) = coords[b].to_scalar();
    }
  }
  return A;
}

std::vector<PMat> kostant_codifferential(const Extension& ext) {
  const Kappa kappa(ext);
  const Signature& sig = ext.sig;
  const auto zeta = dual_pplus_basis(sig);
  const std::size_t m = zeta.size();
  const Scalar half(Rational(1, 2));
  std::vector<PMat> out;
  for (std::size_t j = 0; j < m; ++j) {
    Vec X = kappa.abar().column(j);
    SMat Xmat = gminus_matrix(X, sig);
    PMat s(sig.size(), sig.size());
    for (std::size_t a = 0; a < m; ++a) {
      Vec ea = unit_vector(m, a);
      s += bracket(to_poly(zeta[a]), kappa(ea, X));
      Vec w = gminus_coords(bracket(zeta[a], Xmat), sig);
      if (!is_zero(w)) s -= Poly(half) * kappa(w, ea);
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool is_normal(const Extension& ext) {
  for (const auto& m : kostant_codifferential(ext))
    if (!m.is_zero()) return false;
  return true;
}

NormalizationResult solve_normalization(const Extension& skeleton) {
  const Extension& ext = skeleton;
  std::vector<Poly> eqs;
  for (const auto& m : kostant_codifferential(ext)) push_re_im(eqs, m);
  for (auto l : ext.l_indices)
    for (std::size_t j = 0; j < ext.k.dim(); ++j)
      if (j != l) push_re_im(eqs, tau(ext, l, j));
  for (const auto& e : curvature_table(ext)) push_re_im(eqs, minus_part(e.value, ext.sig));
  for (const auto& c : ext.constraints) {
    if (!c.re().is_zero()) eqs.push_back(c.re());
    if (!c.im().is_zero()) eqs.push_back(c.im());
  }

  NormalizationResult result;
  result.equations = eqs.size();
  std::map<std::string, Poly> subs;
  for (;;) {
    std::vector<Poly> kept;
    for (auto& e : eqs)
      if (!e.is_zero()) {
        if (e.is_constant()) throw NormalizationError("no normal extension for this skeleton: inconsistent equation " + e.str() + " = 0");
        kept.push_back(std::move(e));
      }
    eqs = std::move(kept);

    std::set<std::string> var_set;
    std::vector<const Poly*> lin;
    for (const auto& e : eqs)
      if (e.degree() <= 1) {
        lin.push_back(&e);
        for (const auto& v : e.variables()) var_set.insert(v);
      }
    if (lin.empty()) break;
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    const std::size_t nv = vars.size();
    SMat aug(lin.size(), nv + 1);
    for (std::size_t r = 0; r < lin.size(); ++r) {
      for (std::size_t c = 0; c < nv; ++c) aug(r, c) = lin[r]->linear_coefficient(vars[c]);
      aug(r, nv) = -lin[r]->constant_term();
    }
    Rref rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == nv)
      throw NormalizationError("no normal extension for this skeleton: linear system is inconsistent");
    std::map<std::string, Poly> step;
    std::vector<bool> is_pivot(nv, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      Poly expr(rr.m(r, nv));
      for (std::size_t f = 0; f < nv; ++f)
        if (!is_pivot[f] && !rr.m(r, f).is_zero()) expr -= Poly(rr.m(r, f)) * Poly::var(vars[f]);
      step[vars[rr.pivots[r]]] = expr;
    }
    for (auto& [name, value] : subs) value = value.substitute(step);
    for (auto& [name, value] : step) subs[name] = value;
    for (auto& e : eqs) e = e.substitute(step);
    ++result.passes;
  }
  if (!eqs.empty())
    throw NormalizationError("normalization left a nonlinear residual system, first equation " + eqs.front().str() + " = 0");

  std::set<std::string> free;
  for (const auto& u : ext.unknowns)
    if (!subs.count(u)) free.insert(u);
  for (const auto& [name, value] : subs)
    for (const auto& v : value.variables()) free.insert(v);
  if (!free.empty()) {
    std::string names;
    for (const auto& f : free) names += (names.empty() ? "" : ", ") + f;
    throw NormalizationError("normalization is underdetermined; free unknowns: " + names, free.size());
  }

  for (const auto& [name, value] : subs) result.solution[name] = value.to_scalar();
  result.ext = ext;
  for (auto& m : result.ext.alpha) m = to_poly(evaluate(m, result.solution));
  result.ext.unknowns.clear();
  result.ext.constraints.clear();
  if (!is_normal(result.ext)) throw std::logic_error("solved extension fails the normality re-check");
  return result;
}

SymmetricFormReport check_symmetric_form(const Extension& ext, const std::vector<Vec>& h_basis, const std::vector<Vec>& m_basis) {
  const std::size_t dim = ext.k.dim();
  std::vector<Vec> all = h_basis;
  all.insert(all.end(), m_basis.begin(), m_basis.end());
  for (const auto& v : all)
    if (v.size() != dim) throw ExtensionError("split vectors must have length dim k");
  if (all.size() != dim || rank(from_columns(all, dim)) != dim)
    throw ExtensionError("h and m do not form a vector-space decomposition of k");

  const Signature& sig = ext.sig;
  SymmetricFormReport rep;
  auto vanish = [&](const PMat& m, std::initializer_list<int> grades) {
    for (int g : grades)
      if (!grade_mask(m, g, sig).is_zero()) return false;
    return true;
  };
  for (std::size_t i = 0; i < m_basis.size() && rep.m.ok; ++i)
    if (!vanish(ext.alpha_of(m_basis[i]), {-2, 0, 2})) rep.m = {false, i};
  for (std::size_t i = 0; i < h_basis.size() && rep.h.ok; ++i)
    if (!vanish(ext.alpha_of(h_basis[i]), {-1, 1})) rep.h = {false, i};
  for (std::size_t i = 0; i < ext.l_indices.size() && rep.l.ok; ++i) {
    const PMat& a = ext.alpha[ext.l_indices[i]];
    if (!vanish(a, {-2, -1, 1, 2}) || !a(0, 0).re().is_zero()) rep.l = {false, i};
  }
  return rep;
}

WeylDescriptor invariant_weyl_descriptor(const Extension& ext) {
  const Kappa kappa(ext);
  const Signature& sig = ext.sig;
  const auto comp = ext.complement();
  const std::size_t m = comp.size();
  WeylDescriptor out;
  for (std::size_t i = 0; i < ext.k.dim(); ++i) {
    const SMat r0 = grade_mask(to_scalar(ext.alpha[i]), 0, sig);
    SMat g(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      Vec w = gminus_coords(bracket(r0, gminus_matrix(kappa.abar().column(j), sig)), sig);
      Vec col = mat_vec(kappa.abar_inv(), w);
      for (std::size_t r = 0; r < m; ++r) g(r, j) = col[r];
    }
    out.gamma.push_back(std::move(g));
  }
  for (auto l : ext.l_indices) {
    SMat ad(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      Vec b = ext.k.bracket_basis(l, comp[j]);
      for (std::size_t r = 0; r < m; ++r) ad(r, j) = b[comp[r]];
    }
    if (ad != out.gamma[l]) {
      out.l_consistent = false;
      out.l_mismatch.push_back(l);
    }
  }
  return out;
}

bool metrizability_check(const Extension& ext) {
  for (const auto& a : ext.alpha)
    if (!a(0, 0).re().is_zero()) return false;
  return true;
}

NijenhuisReport nijenhuis_check(const Extension& ext) {
  const Kappa kappa(ext);
  const Signature& sig = ext.sig;
  const std::size_t n = sig.n(), dimV = 2 * n + 2, gr = 2 * n + 1;
  const auto xi = gminus_basis(sig);
  const SMat E = grading_element(sig);

  // V = R + C^n + span(E_gr), coordinates (x, e_1, i e_1, ..., g).
  auto to_matrix = [&](const Vec& v) {
    SMat m = v[gr] * E;
    for (std::size_t b = 0; b < gr; ++b)
      if (!v[b].is_zero()) m += v[b] * xi[b];
    return m;
  };
  auto reduce = [&](const SMat& m) {
    Vec v = gminus_coords(m, sig);
    v.push_back(m(0, 0).re());
    return v;
  };
  auto J = [&](const Vec& v) {
    Vec w(dimV);
    w[0] = v[gr];
    w[gr] = -v[0];
    for (std::size_t k = 0; k < n; ++k) {
      w[1 + 2 * k] = -v[2 + 2 * k];
      w[2 + 2 * k] = v[1 + 2 * k];
    }
    return w;
  };
  auto br = [&](const Vec& a, const Vec& b) {
    Vec am(a.begin(), a.begin() + gr), bm(b.begin(), b.begin() + gr);
    SMat k = to_scalar(kappa(am, bm));
    return reduce(bracket(to_matrix(a), to_matrix(b)) - k);
  };

  NijenhuisReport rep;
  auto kind = [&](std::size_t i) { return i == 0 ? 'r' : (i == gr ? 'g' : 'c'); };
  for (std::size_t i = 0; i < dimV; ++i)
    for (std::size_t j = 0; j < dimV; ++j) {
      Vec X = unit_vector(dimV, i), Y = unit_vector(dimV, j);
      Vec N = br(X, Y) - br(J(X), J(Y)) + J(br(J(X), Y) + br(X, J(Y)));
      if (is_zero(N)) continue;
      std::string pair{kind(i), kind(j)};
      std::sort(pair.begin(), pair.end());
      if (pair == "cc")
        rep.cn_cn = false;
      else if (pair == "cr")
        rep.cn_r = false;
      else if (pair == "cg")
        rep.cn_gr = false;
      else if (pair == "gr")
        rep.r_gr = false;
      else
        rep.rest = false;
    }
  return rep;
}

}  // namespace crsym
