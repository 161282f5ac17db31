#include "doctest.h"

#include "crsym/builtins.hpp"
#include "crsym/random.hpp"

using namespace crsym;

namespace {

SMat value(const Extension& ext, std::size_t i) { return to_scalar(ext.alpha[i]); }

}  // namespace

TEST_CASE("builtin algebras satisfy Jacobi") {
  CHECK(builtins::e2_algebra().satisfies_jacobi());
  CHECK(builtins::e2_standard_algebra().satisfies_jacobi());
  CHECK(builtins::sp_extension(builtins::sp11_generators()).k.satisfies_jacobi());
  CHECK(builtins::sp_extension(builtins::sp4r_generators()).k.satisfies_jacobi());
  CHECK(builtins::standard_extension({1, 1, 1}).k.satisfies_jacobi());
}

TEST_CASE("lie algebra basics") {
  const LieAlg k = builtins::e2_algebra();
  CHECK(k.is_antisymmetric());
  CHECK(k.bracket_basis(1, 2) == Vec{Scalar(-2), Scalar(0), Scalar(0)});
  CHECK(k.bracket_basis(1, 0) == Vec{Scalar(0), Scalar(0), Scalar(Rational(1, 2))});
  CHECK(k.is_subalgebra({Vec{Scalar(1), Scalar(0), Scalar(0)}}));
  CHECK(!k.is_subalgebra({Vec{Scalar(0), Scalar(1), Scalar(0)}, Vec{Scalar(1), Scalar(0), Scalar(0)}}));
  LieAlg bad = k;
  bad.c[1][2][0] = Rational(5);
  CHECK_THROWS(bad.validate());
  CHECK(LieAlg::abelian({"a", "b"}).bracket_basis(0, 1) == Vec{Scalar(0), Scalar(0)});
}

TEST_CASE("e2 extension: structure and reference curvature") {
  const Extension ext = builtins::e2_extension();
  CHECK(check_structure(ext).ok());
  CHECK(to_scalar(tau(ext, 0, 1)) == builtins::e2_tau_x_X1());
  CHECK(to_scalar(tau(ext, 0, 2)) == builtins::e2_tau_x_X2());
  CHECK(to_scalar(tau(ext, 1, 2)).is_zero());
  const SMat t = builtins::e2_tau_x_X1();
  CHECK(t(0, 1) == Scalar(0, Rational(-3, 32)));
  CHECK(t(1, 2) == Scalar(0, Rational(-3, 32)));
  for (const auto& e : curvature_table(ext)) CHECK(e.in_p);
  CHECK(!is_flat(ext));
  CHECK(is_normal(ext));
  CHECK(weyl_is_zero(ext));
  CHECK(metrizability_check(ext));
  CHECK(nijenhuis_check(ext).ok());
}

TEST_CASE("e2 reference alpha entries") {
  const Extension ext = builtins::e2_extension();
  const Signature sig = ext.sig;
  const auto gx = decompose(value(ext, 0), sig);
  CHECK(gx.x == Scalar(1));
  CHECK(gx.a == Scalar(0, Rational(1, 16)));
  CHECK(gx.A(0, 0) == Scalar(0, Rational(-1, 8)));
  CHECK(gx.z == Scalar(Rational(-15, 256)));
  const auto g1 = decompose(value(ext, 1), sig);
  CHECK(g1.X[0] == Scalar(1));
  CHECK(g1.Z[0] == Scalar(Rational(-5, 16)));
  const auto g2 = decompose(value(ext, 2), sig);
  CHECK(g2.X[0] == Scalar::i());
  CHECK(g2.Z[0] == Scalar(0, Rational(-3, 16)));
}

TEST_CASE("normalization of the e2 skeleton") {
  const Extension skel = builtins::e2_skeleton();
  CHECK(skel.has_unknowns());
  const NormalizationResult res = solve_normalization(skel);
  CHECK(res.solution.at("a") == Scalar(Rational(1, 16)));
  CHECK(res.solution.at("r") == Scalar(Rational(-15, 256)));
  const Extension expected = builtins::e2_extension();
  for (std::size_t i = 0; i < 3; ++i) CHECK(to_scalar(res.ext.alpha[i]) == value(expected, i));
}

TEST_CASE("perturbations break normality") {
  Extension ext = builtins::e2_extension();
  SMat m = value(ext, 0);
  m(0, 2) += Scalar(0, Rational(1, 100));  // rho2 shifted
  ext.alpha[0] = to_poly(m);
  CHECK(check_structure(ext).ok());
  CHECK(!is_normal(ext));
  const auto dk = kostant_codifferential(ext);
  bool witness = false;
  for (const auto& v : dk) witness = witness || !v.is_zero();
  CHECK(witness);
}

TEST_CASE("structure violations are reported") {
  Extension ext = builtins::e2_extension();
  SMat m = value(ext, 1);
  m(0, 0) += Scalar(1);
  ext.alpha[1] = to_poly(m);
  CHECK(!check_structure(ext).members);

  Extension deg = builtins::e2_extension();
  deg.alpha[2] = deg.alpha[1];
  CHECK(!check_structure(deg).isomorphism);
}

TEST_CASE("flat inclusions") {
  for (const auto& gens : {builtins::sp11_generators(), builtins::sp4r_generators()}) {
    const Signature sig = builtins::sp_signature();
    for (const auto& g : gens) CHECK(is_member(g, sig));
    std::vector<Vec> rows;
    for (const auto& g : gens) rows.push_back(realify(g));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) rows.push_back(realify(bracket(gens[i], gens[j])));
    CHECK(independent_subset(rows, rows.front().size()).size() == 10);
    const Extension ext = builtins::sp_extension(gens);
    CHECK(check_structure(ext).ok());
    CHECK(is_flat(ext));
    CHECK(is_normal(ext));
    CHECK(weyl_is_zero(ext));
  }
}

TEST_CASE("standard inclusion") {
  for (const Signature sig : {Signature{0, 1, 1}, Signature{1, 1, 1}}) {
    const Extension ext = builtins::standard_extension(sig);
    CHECK(check_structure(ext).ok());
    CHECK(is_flat(ext));
    CHECK(is_normal(ext));
    const NijenhuisReport nj = nijenhuis_check(ext);
    CHECK(nj.cn_cn);
    CHECK(nj.cn_r);
    CHECK(nj.cn_gr);
    CHECK(nj.r_gr);
    CHECK(nj.rest);
  }
}

TEST_CASE("symmetric form of the e2 extension") {
  const Extension ext = builtins::e2_extension();
  const SymmetricFormReport r = check_symmetric_form(ext, {Vec{Scalar(1), Scalar(0), Scalar(0)}},
                                                    {Vec{Scalar(0), Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(0), Scalar(1)}});
  CHECK(r.ok());
  const SymmetricFormReport mixed = check_symmetric_form(ext, {Vec{Scalar(1), Scalar(1), Scalar(0)}},
                                                        {Vec{Scalar(0), Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(0), Scalar(1)}});
  CHECK(!mixed.ok());
}

TEST_CASE("Weyl descriptor is consistent on e2") {
  const WeylDescriptor wd = invariant_weyl_descriptor(builtins::e2_extension());
  CHECK(wd.gamma.size() == 3);
  CHECK(wd.l_consistent);
}

TEST_CASE("curvature of seeded linear maps is antisymmetric") {
  Rng rng(33);
  const Extension base = builtins::e2_extension();
  for (int t = 0; t < 20; ++t) {
    Extension ext = base;
    for (auto& a : ext.alpha) {
      SMat m = to_scalar(a);
      m += grade_mask(rng.member(ext.sig), 1, ext.sig) + grade_mask(rng.member(ext.sig), 2, ext.sig);
      a = to_poly(m);
    }
    CHECK(check_structure(ext).ok());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(tau(ext, i, j) == -tau(ext, j, i));
  }
}
