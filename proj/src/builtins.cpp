#include "crsym/builtins.hpp"

#include <array>

namespace crsym::builtins {

namespace {

const Scalar iu = Scalar::i();

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }

SMat rows3(std::initializer_list<std::initializer_list<Scalar>> rows) {
  SMat m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// Values of (l1..l5, x, X1..X4) for one generator.
using SpArgs = std::array<Scalar, 10>;

std::vector<SMat> generators(SMat (*family)(const SpArgs&)) {
  std::vector<SMat> out;
  for (std::size_t k = 0; k < 10; ++k) {
    SpArgs a{};
    a[k] = Scalar(1);
    out.push_back(family(a));
  }
  return out;
}

SMat sp11_matrix(const SpArgs& v) {
  const Scalar &l1 = v[0], &l2 = v[1], &l3 = v[2], &l4 = v[3], &l5 = v[4], &x = v[5];
  const Scalar &X1 = v[6], &X2 = v[7], &X3 = v[8], &X4 = v[9];
  const Scalar h = q(1, 2);
  return rows3({
      {l1 + iu * l2, iu * X2 + iu * l5 - X1 + l4, iu * X4 + iu * l5 - X3 + l4, iu * (l3 + x)},
      {iu * X2 + X1, -iu * h * (Scalar(2) * l2 + Scalar(2) * x + l3), -iu * l3 * h - l1, iu * X2 + iu * l5 + X1 - l4},
      {iu * X4 + X3, iu * l3 * h - l1, -iu * h * (Scalar(2) * l2 - Scalar(2) * x - l3), -iu * X4 - iu * l5 - X3 + l4},
      {iu * x, iu * X2 - X1, X3 - iu * X4, -l1 + iu * l2},
  });
}

SMat sp4r_matrix(const SpArgs& v) {
  const Scalar &l1 = v[0], &l2 = v[1], &l3 = v[2], &l4 = v[3], &l5 = v[4], &x = v[5];
  const Scalar &X1 = v[6], &X2 = v[7], &X3 = v[8], &X4 = v[9];
  const Scalar h = q(1, 2);
  return rows3({
      {l1 + iu * l2, X1 - iu * X2 + l4 + iu * l5, X3 - iu * X4 - l4 - iu * l5, iu * (l3 + x)},
      {iu * X2 + X1, -iu * h * (Scalar(2) * l2 - Scalar(2) * x - l3), l1 - iu * l3 * h, -iu * X2 + iu * l5 - X1 - l4},
      {iu * X4 + X3, l1 + iu * l3 * h, -iu * h * (Scalar(2) * l2 + Scalar(2) * x + l3), iu * X4 + iu * l5 + X3 - l4},
      {iu * x, iu * X2 - X1, X3 - iu * X4, -l1 + iu * l2},
  });
}

AffineSpace point_space(const Vec& p) {
  std::vector<AffineForm> eqs;
  for (std::size_t k = 0; k < p.size(); ++k) {
    AffineForm f{Vec(p.size()), -p[k]};
    f.coeffs[k] = Scalar(1);
    eqs.push_back(std::move(f));
  }
  return solve_affine(eqs, p.size());
}

AffineSpace empty_space(std::size_t m) {
  AffineSpace s;
  s.ambient = m;
  return s;
}

// sum of (index, coefficient) terms + constant = 0 on R^9.
AffineForm form9(std::initializer_list<std::pair<std::size_t, long>> terms, long constant) {
  AffineForm f{Vec(9), Scalar(constant)};
  for (const auto& [idx, c] : terms) f.coeffs[idx] = Scalar(c);
  return f;
}

Vec e(std::size_t k, const Scalar& v = Scalar(1)) {
  Vec out(6);
  out[k] = v;
  return out;
}

}  // namespace

std::vector<std::string> names() { return {"e2", "sp11", "sp4r", "standard", "exam61", "exam62"}; }

LieAlg e2_algebra() {
  LieAlg g = LieAlg::abelian({"x", "X1", "X2"});
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    g.c[i][j][k] = v;
    g.c[j][i][k] = -v;
  };
  set(1, 0, 2, Rational(1, 2));
  set(1, 2, 0, Rational(-2));
  return g;
}

Extension e2_extension() {
  Extension ext;
  ext.sig = Signature{0, 1, -1};
  ext.k = e2_algebra();
  ext.alpha = {
      to_poly(rows3({{iu * q(1, 16), 0, -iu * q(15, 256)}, {0, -iu * q(1, 8), 0}, {iu, 0, iu * q(1, 16)}})),
      to_poly(rows3({{0, -q(5, 16), 0}, {1, 0, q(5, 16)}, {0, -1, 0}})),
      to_poly(rows3({{0, -iu * q(3, 16), 0}, {iu, 0, -iu * q(3, 16)}, {0, iu, 0}})),
  };
  return ext;
}

Extension e2_skeleton() {
  const CrAlgebra cr = e2_cr_algebra();
  const AdaptedFrame frame = adapted_frame(cr, derive_l_and_H(cr), e2_choice());
  return make_skeleton(frame, {}, cr.d);
}

SMat e2_tau_x_X1() { return rows3({{0, -iu * q(3, 32), 0}, {0, 0, -iu * q(3, 32)}, {0, 0, 0}}); }
SMat e2_tau_x_X2() { return rows3({{0, q(3, 32), 0}, {0, 0, -q(3, 32)}, {0, 0, 0}}); }

LieAlg e2_standard_algebra() {
  LieAlg g = LieAlg::abelian({"e1", "e2", "r"});
  g.c[2][0][1] = 1;
  g.c[0][2][1] = -1;
  g.c[2][1][0] = -1;
  g.c[1][2][0] = 1;
  return g;
}

SMat e2_distinguished_frame() { return rows3({{q(1, 2), 0, 0}, {0, 0, 1}, {0, 1, 0}}); }

CrAlgebra e2_cr_algebra() { return cr_algebra_from_frame(e2_standard_algebra(), e2_distinguished_frame()); }

BasisChoice e2_choice() { return choice_from_frame(e2_distinguished_frame()); }

BasisChoice e2_parity_mixing_choice() {
  BasisChoice ch = e2_choice();
  ch.complement = Vec{q(1, 2), 0, 1};
  return ch;
}

std::vector<SMat> sp11_generators() { return generators(sp11_matrix); }
std::vector<SMat> sp4r_generators() { return generators(sp4r_matrix); }
std::vector<std::string> sp_names() { return {"l1", "l2", "l3", "l4", "l5", "x", "X1", "X2", "X3", "X4"}; }
Signature sp_signature() { return Signature{1, 1, 1}; }

Extension sp_extension(const std::vector<SMat>& gens) {
  Extension ext;
  ext.sig = sp_signature();
  ext.k = LieAlg::from_matrices(sp_names(), gens);
  ext.l_indices = {0, 1, 2, 3, 4};
  for (const auto& m : gens) ext.alpha.push_back(to_poly(m));
  return ext;
}

CrAlgebra sp_cr_algebra(const std::vector<SMat>& gens) { return cr_algebra_from_extension(sp_extension(gens)); }

BasisChoice sp_choice(const std::vector<SMat>& gens) {
  BasisChoice ch;
  ch.complement = unit_vector(10, 5);
  ch.representatives = {unit_vector(10, 6), unit_vector(10, 8)};
  ch.j_images = {unit_vector(10, 7), unit_vector(10, 9)};
  ch.flat_alpha = gens;
  ch.flat_signature = sp_signature();
  return ch;
}

Signature standard_signature() { return Signature{1, 1, 1}; }

Extension standard_extension(const Signature& sig) {
  Extension ext;
  ext.sig = sig;
  const auto basis = su_basis(sig);
  ext.k = LieAlg::from_matrices(su_basis_names(sig), basis);
  for (std::size_t k = 2 * sig.n() + 1; k < basis.size(); ++k) ext.l_indices.push_back(k);
  for (const auto& m : basis) ext.alpha.push_back(to_poly(m));
  return ext;
}

CrAlgebra standard_cr_algebra(const Signature& sig) { return cr_algebra_from_extension(standard_extension(sig)); }

BasisChoice standard_choice(const Signature& sig) {
  const auto basis = su_basis(sig);
  const std::size_t dim = basis.size();
  BasisChoice ch;
  ch.complement = unit_vector(dim, 0);
  for (std::size_t k = 0; k < sig.n(); ++k) {
    ch.representatives.push_back(unit_vector(dim, 1 + 2 * k));
    ch.j_images.push_back(unit_vector(dim, 2 + 2 * k));
  }
  ch.flat_alpha = basis;
  ch.flat_signature = sig;
  return ch;
}

Signature exam_signature() { return Signature{2, 2, 1}; }

std::vector<SymmetryCase> exam61_cases() {
  const Scalar r2 = Scalar::sqrt_d(2);
  // Coordinates (a1..a4, b1..b4, z).
  std::vector<SymmetryCase> out;
  {
    Vec p(9);
    p[4] = -r2;
    p[7] = -r2;
    out.push_back({"case1", {e(0, iu) + e(1, r2) + e(5, -iu), e(0, iu) + e(4, -r2) + e(5, iu)}, OrbitCase::Case1, empty_space(9),
                   point_space(p)});
  }
  out.push_back({"case2", {e(1) + e(4), e(5, iu)}, OrbitCase::Case2, point_space(Vec(9)), empty_space(9)});
  out.push_back({"case3",
                 {e(1) + e(4), e(0) + e(1) + e(4)},
                 OrbitCase::Case3,
                 empty_space(9),
                 solve_affine({form9({{0, 1}, {3, 1}}, 1), form9({{4, 1}, {7, 1}}, 0)}, 9)});
  out.push_back({"case4",
                 {e(1) + e(4), e(2) + e(3)},
                 OrbitCase::Case4,
                 solve_affine({form9({{0, 1}, {3, 1}}, 0), form9({{4, 1}, {7, 1}}, 0), form9({{1, 1}, {2, 1}}, 0),
                               form9({{5, 1}, {6, 1}}, 0)},
                              9),
                 empty_space(9)});
  return out;
}

SymmetryCase exam62_case() {
  const Scalar r2 = Scalar::sqrt_d(2);
  return {"exam62", {e(5), e(0) + e(1, r2) + e(4, Scalar(1) + iu)}, OrbitCase::NonIsotropicPair, empty_space(9), empty_space(9)};
}

}  // namespace crsym::builtins
