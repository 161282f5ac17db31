#include "doctest.h"

#include "crsym/random.hpp"
#include "crsym/sualg.hpp"

using namespace crsym;

namespace {

const std::vector<Signature> kSigs{{0, 1, 1}, {1, 1, 1}, {2, 2, 1}, {1, 2, -1}};

int grade_of_basis(std::size_t k, std::size_t n) {
  const std::size_t minus = 2 * n + 1, zero = minus + n * n + 1;
  if (k == 0) return -2;
  if (k < minus) return -1;
  if (k < zero) return 0;
  if (k == zero) return 2;
  return 1;
}

}  // namespace

TEST_CASE("signature validation") {
  CHECK_THROWS(Signature{0, 0, 1}.validate());
  CHECK_THROWS(Signature{-1, 2, 1}.validate());
  CHECK_THROWS(Signature{1, 1, 0}.validate());
  CHECK_NOTHROW(Signature{2, 2, -1}.validate());
}

TEST_CASE("basis sizes and names") {
  for (const auto& sig : kSigs) {
    const std::size_t n = sig.n();
    CHECK(gminus_basis(sig).size() == 2 * n + 1);
    CHECK(pplus_basis(sig).size() == 2 * n + 1);
    CHECK(g0_basis(sig).size() == n * n + 1);
    CHECK(su_basis(sig).size() == sig.size() * sig.size() - 1);
    CHECK(su_basis_names(sig).size() == su_basis(sig).size());
    for (const auto& b : su_basis(sig)) CHECK(is_member(b, sig));
  }
}

TEST_CASE("grading element eigenvalues") {
  for (const auto& sig : kSigs) {
    const SMat E = grading_element(sig);
    const auto basis = su_basis(sig);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const int g = grade_of_basis(k, sig.n());
      CHECK(bracket(E, basis[k]) == Scalar(g) * basis[k]);
      CHECK(grade_project(basis[k], g, sig) == basis[k]);
    }
  }
}

TEST_CASE("membership closure under brackets and sums") {
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 200; ++t) {
    const Signature& sig = kSigs[t % kSigs.size()];
    const SMat a = rng.member(sig), b = rng.member(sig);
    CHECK(is_member(bracket(a, b), sig));
    CHECK(is_member(a + rng.real() * b, sig));
    CHECK(su_element(su_coords(a, sig), sig) == a);
  }
}

TEST_CASE("assemble and decompose") {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const Signature& sig = kSigs[t % kSigs.size()];
    const SMat m = rng.member(sig);
    const auto g = decompose(m, sig);
    CHECK(assemble(g, sig) == m);
    Mat<Scalar> sum(sig.size(), sig.size());
    for (int k = -2; k <= 2; ++k) sum += grade_project(m, k, sig);
    CHECK(sum == m);
  }
  const Signature sig{1, 1, 1};
  auto g = GradedParts<Scalar>::zero(2);
  g.x = Scalar::i();
  CHECK_THROWS_AS(assemble(g, sig), MembershipError);
  g = GradedParts<Scalar>::zero(2);
  g.A(0, 0) = Scalar(1);
  CHECK_THROWS_AS(assemble(g, sig), MembershipError);
  CHECK_THROWS_AS(decompose(SMat::identity(4), sig), MembershipError);
  CHECK_THROWS_AS(grade_project(SMat(4, 4), 3, sig), std::out_of_range);
}

TEST_CASE("trace pairing between g_- and p_+") {
  for (const auto& sig : kSigs) {
    const SMat G = pairing_gram(sig);
    CHECK(inverse(G));
    const auto dual = dual_pplus_basis(sig);
    const auto gm = gminus_basis(sig);
    for (std::size_t a = 0; a < gm.size(); ++a)
      for (std::size_t c = 0; c < dual.size(); ++c) CHECK(trace_form(gm[a], dual[c]) == Scalar(a == c ? 1 : 0));
  }
}

TEST_CASE("Levi form signature") {
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 2}, {1, 3}}) {
    const Signature sig{p, q, 1};
    const Inertia in = inertia(levi_gram(sig));
    CHECK(in.zero == 0);
    CHECK(std::min(in.pos, in.neg) == 2 * std::min<std::size_t>(p, q));
    CHECK(std::max(in.pos, in.neg) == 2 * std::max<std::size_t>(p, q));
    CHECK(levi_signature(sig) == std::pair<std::size_t, std::size_t>(2 * std::min(p, q), 2 * std::max(p, q)));
  }
  const Signature sig{1, 1, 1};
  const Vec e1{Scalar(1), Scalar(0)};
  const LeviValue v = levi_form(e1, e1, sig);
  CHECK(v.im.is_zero());
  CHECK(!v.re.is_zero());
}

TEST_CASE("csu splits into u(p,q) and the grading direction") {
  Rng rng(17);
  for (const auto& sig : kSigs) {
    for (int t = 0; t < 10; ++t) {
      const auto g = decompose(grade_project(rng.member(sig), 0, sig), sig);
      const CsuSplit s = u_pq_complement_split(g.a, g.A, sig);
      CHECK(s.gr_coefficient.is_real());
      CHECK((s.u_a + s.u_a.conj()).is_zero());
      CHECK(s.u_a + s.gr_coefficient == g.a);
      CHECK(s.u_A == g.A);
    }
  }
}
