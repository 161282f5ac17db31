#include "doctest.h"

#include "crsym/builtins.hpp"

using namespace crsym;

namespace {

Vec v3(int a, int b, int c) { return Vec{Scalar(a), Scalar(b), Scalar(c)}; }

// Heisenberg algebra (T, X1, X2) with [X1, X2] = 2T, q = span(X1 + i X2).
CrAlgebra heisenberg() {
  CrAlgebra cr;
  cr.k = LieAlg::abelian({"T", "X1", "X2"});
  cr.k.c[1][2][0] = 2;
  cr.k.c[2][1][0] = -2;
  cr.q_basis = {Vec{Scalar(0), Scalar(1), Scalar::i()}};
  return cr;
}

// Heisenberg plus a central element c in l.
CrAlgebra heisenberg_central() {
  CrAlgebra cr;
  cr.k = LieAlg::abelian({"T", "X1", "X2", "c"});
  cr.k.c[1][2][0] = 2;
  cr.k.c[2][1][0] = -2;
  cr.q_basis = {Vec{Scalar(0), Scalar(1), Scalar::i(), Scalar(0)}, Vec{Scalar(0), Scalar(0), Scalar(0), Scalar(1)}};
  return cr;
}

BasisChoice heisenberg_choice(std::size_t dim) {
  BasisChoice ch;
  ch.complement = unit_vector(dim, 0);
  ch.representatives = {unit_vector(dim, 1)};
  ch.j_images = {unit_vector(dim, 2)};
  return ch;
}

}  // namespace

TEST_CASE("l and H for e2") {
  const LeviData levi = derive_l_and_H(builtins::e2_cr_algebra());
  CHECK(levi.l_basis.empty());
  CHECK(levi.H_basis.size() == 2);
  CHECK(levi.n == 1);
  CHECK(levi.levi_signature == std::pair<std::size_t, std::size_t>(0, 1));
}

TEST_CASE("l = p for the standard model") {
  const Signature sig{1, 1, 1};
  const LeviData levi = derive_l_and_H(builtins::standard_cr_algebra(sig));
  CHECK(levi.l_basis.size() == builtins::standard_extension(sig).l_indices.size());
  CHECK(levi.n == 2);
  CHECK(levi.levi_signature == std::pair<std::size_t, std::size_t>(1, 1));
}

TEST_CASE("degenerate CR algebras are rejected") {
  CrAlgebra real_q = heisenberg();
  real_q.q_basis = {v3(0, 1, 0), v3(0, 0, 1)};
  CHECK_THROWS_AS(derive_l_and_H(real_q), CrAlgebraError);

  CrAlgebra abelian = heisenberg();
  abelian.k = LieAlg::abelian({"T", "X1", "X2"});
  CHECK_THROWS_AS(derive_l_and_H(abelian), CrAlgebraError);

  CrAlgebra not_sub = heisenberg();
  not_sub.q_basis = {Vec{Scalar(0), Scalar(1), Scalar::i()}, Vec{Scalar(0), Scalar(1), Scalar(0)}};
  CHECK_THROWS(not_sub.validate());
}

TEST_CASE("J on the e2 distinguished frame") {
  const CrAlgebra cr = builtins::e2_cr_algebra();
  const SMat B = builtins::e2_distinguished_frame();
  CHECK(apply_J(cr, B.column(1)) == B.column(2));
  CHECK(apply_J(cr, B.column(2)) == Scalar(-1) * B.column(1));
}

TEST_CASE("nu test") {
  CHECK(nu_automorphism_test(builtins::e2_cr_algebra(), builtins::e2_choice()).ok());
  const NuTestResult mixed = nu_automorphism_test(builtins::e2_cr_algebra(), builtins::e2_parity_mixing_choice());
  CHECK(!mixed.bracket_route);
  CHECK(!mixed.tau_route);
  CHECK(nu_automorphism_test(heisenberg(), heisenberg_choice(3)).ok());
}

TEST_CASE("injectivity shortcut") {
  const CrAlgebra e2 = builtins::e2_cr_algebra();
  const LeviData levi = derive_l_and_H(e2);
  const InjectivityResult r = injectivity_shortcut(adapted_frame(e2, levi, builtins::e2_choice()));
  CHECK(r.verdict == Injectivity::Injective);
  CHECK(r.kernel_dimension == 0);

  const CrAlgebra hc = heisenberg_central();
  const InjectivityResult c = injectivity_shortcut(adapted_frame(hc, derive_l_and_H(hc), heisenberg_choice(4)));
  CHECK(c.verdict == Injectivity::NotInjectiveHenceFlat);
  CHECK(c.kernel_dimension == 1);
  CHECK(check_symmetric(hc, heisenberg_choice(4)).verdict == Verdict::FlatLocallySymmetric);
}

TEST_CASE("badly normalized choices are rejected") {
  BasisChoice ch = heisenberg_choice(3);
  ch.complement = v3(2, 0, 0);
  CHECK_THROWS_AS(adapted_frame(heisenberg(), derive_l_and_H(heisenberg()), ch), CrAlgebraError);
  BasisChoice wrong_j = heisenberg_choice(3);
  wrong_j.j_images = {v3(0, 1, 1)};
  CHECK_THROWS_AS(adapted_frame(heisenberg(), derive_l_and_H(heisenberg()), wrong_j), CrAlgebraError);
}

TEST_CASE("e2 pipeline reproduces the reference extension") {
  const CrReport rep = check_symmetric(builtins::e2_cr_algebra(), builtins::e2_choice());
  REQUIRE(rep.verdict == Verdict::Symmetric);
  REQUIRE(rep.extension);
  const Extension expected = builtins::e2_extension();
  for (std::size_t i = 0; i < 3; ++i) CHECK(rep.extension->alpha[i] == expected.alpha[i]);
  CHECK(rep.extension->sig == expected.sig);
  CHECK(check_structure(*rep.extension).ok());
  CHECK(is_normal(*rep.extension));
  CHECK(!rep.not_checked.empty());
  CHECK(check_symmetric(builtins::e2_cr_algebra(), builtins::e2_parity_mixing_choice()).verdict ==
        Verdict::NotSymmetricForChoice);
}

TEST_CASE("Heisenberg CR algebra is symmetric with a flat normal extension") {
  const CrReport rep = check_symmetric(heisenberg(), heisenberg_choice(3));
  REQUIRE(rep.verdict == Verdict::Symmetric);
  REQUIRE(rep.extension);
  CHECK(check_structure(*rep.extension).ok());
  CHECK(is_normal(*rep.extension));
  CHECK(is_flat(*rep.extension));
}

TEST_CASE("flat models") {
  for (const auto& gens : {builtins::sp11_generators(), builtins::sp4r_generators()}) {
    const CrReport rep = check_symmetric(builtins::sp_cr_algebra(gens), builtins::sp_choice(gens));
    CHECK(rep.verdict == Verdict::FlatLocallySymmetric);
    CHECK(rep.injectivity.kernel_dimension > 0);
    REQUIRE(rep.extension);
    CHECK(is_flat(*rep.extension));
  }
  const Signature sig{1, 1, 1};
  const CrReport st = check_symmetric(builtins::standard_cr_algebra(sig), builtins::standard_choice(sig));
  CHECK(st.verdict == Verdict::FlatLocallySymmetric);
}

TEST_CASE("variety membership") {
  const VarietyMatch m = verify_variety_membership(builtins::e2_distinguished_frame());
  CHECK(m.member);
  CHECK(m.params == std::array<Scalar, 6>{Scalar(1), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)});
  CHECK(!verify_variety_membership(SMat::identity(3)).member);
  CHECK_THROWS(verify_variety_membership(SMat(3, 3)));
  CHECK_THROWS(verify_variety_membership(SMat::identity(2)));

  // Built from parameters (2, 1, 1, 1, 3, -1) with p1 p2 = p3 p4 + 2 * top-left.
  const std::array<int, 6> p{2, 1, 1, 1, 3, -1};
  SMat B(3, 3);
  B(0, 0) = Scalar(Rational(p[0] * p[1] - p[2] * p[3], 2));
  B(0, 1) = Scalar(p[4]);
  B(0, 2) = Scalar(Rational(p[4] * p[2] - 2 * p[5], 2));
  B(1, 0) = Scalar(p[5]);
  B(1, 1) = Scalar(p[3]);
  B(1, 2) = Scalar(p[1]);
  B(2, 1) = Scalar(p[0]);
  B(2, 2) = Scalar(p[2]);
  const VarietyMatch built = verify_variety_membership(B);
  CHECK(built.member);
  CHECK(built.params[0] == Scalar(2));
  CHECK(built.params[5] == Scalar(-1));
}

TEST_CASE("search on e2") {
  const SearchResult res = search_symmetric(builtins::e2_cr_algebra());
  CHECK(!res.globally_not_symmetric);
  bool contains = false;
  for (const auto& g : res.gauges)
    if (g.consistent && g.contains(builtins::e2_distinguished_frame())) contains = true;
  CHECK(contains);
  CHECK(!res.samples.empty());
  for (const auto& s : res.samples) CHECK(s.verdict != Verdict::NotSymmetricForChoice);
}

TEST_CASE("search scope") {
  CHECK_THROWS(search_symmetric(heisenberg_central()));
}

TEST_CASE("CR algebra from an extension") {
  const CrAlgebra cr = cr_algebra_from_extension(builtins::e2_extension());
  const LeviData levi = derive_l_and_H(cr);
  CHECK(levi.l_basis.empty());
  CHECK(levi.n == 1);
}
