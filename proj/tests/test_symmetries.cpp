#include "doctest.h"

#include "crsym/builtins.hpp"
#include "crsym/random.hpp"
#include "crsym/symmetries.hpp"

using namespace crsym;

namespace {

Vec basis_vec(std::size_t n, std::size_t k, const Scalar& c = Scalar(1)) {
  Vec v(n);
  v[k] = c;
  return v;
}

}  // namespace

TEST_CASE("symmetry matrices preserve the form") {
  Rng rng(kDefaultSeed);
  for (const Signature sig : {Signature{0, 1, 1}, Signature{1, 1, 1}, Signature{2, 2, 1}}) {
    const SMat H = hermitian_form_matrix(sig);
    for (int t = 0; t < 20; ++t) {
      const Vec Z = rng.complex_vec(sig.n());
      const Scalar z = t % 3 == 0 ? Scalar(0) : rng.real();
      const SymmetryMatrix s = make_symmetry(Z, z, sig);
      CHECK(conj_transpose(s.mat) * H * s.mat == H);
      CHECK(is_involutive(s) == z.is_zero());
      SMat expected = SMat::identity(sig.size());
      expected(0, sig.size() - 1) = Scalar(-2) * Scalar::i() * z;
      CHECK(s.mat * s.mat == expected);
    }
  }
}

TEST_CASE("symmetry input errors") {
  const Signature sig{1, 1, 1};
  CHECK_THROWS(make_symmetry(Vec{Scalar(1)}, Scalar(0), sig));
  CHECK_THROWS(make_symmetry(Vec{Scalar(1), Scalar(0)}, Scalar::i(), sig));
  NullLinePair bad{basis_vec(4, 1), basis_vec(4, 0)};
  CHECK_THROWS(validate_pair(bad, sig));
  NullLinePair zero{Vec(4), basis_vec(4, 0)};
  CHECK_THROWS(validate_pair(zero, sig));
}

TEST_CASE("hermitian form and lines") {
  const Signature sig{1, 1, 1};
  const Vec e0 = basis_vec(4, 0), e3 = basis_vec(4, 3);
  CHECK(hermitian_form(e0, e0, sig).is_zero());
  CHECK(hermitian_form(e0, e3, sig) == Scalar(1));
  CHECK(same_line(e0, Scalar::i() * e0));
  CHECK(!same_line(e0, e3));
}

TEST_CASE("line-pair examples in signature (2,2)") {
  const Signature sig = builtins::exam_signature();
  for (const auto& c : builtins::exam61_cases()) {
    CAPTURE(c.name);
    REQUIRE(c.orbit);
    CHECK(classify_pair(c.pair, sig) == *c.orbit);
    const AffineSpace pres = find_symmetries(c.pair, SymmetryMode::Preserve, sig);
    const AffineSpace swap = find_symmetries(c.pair, SymmetryMode::Swap, sig);
    CHECK(same_affine(pres, c.preserve));
    if (c.name != "case1") CHECK(same_affine(swap, c.swap));
    CHECK(!unsound_point(pres, c.pair, SymmetryMode::Preserve, sig));
    CHECK(!unsound_point(swap, c.pair, SymmetryMode::Swap, sig));
  }
  const auto e = builtins::exam62_case();
  CHECK(find_symmetries(e.pair, SymmetryMode::Preserve, sig).empty);
  CHECK(find_symmetries(e.pair, SymmetryMode::Swap, sig).empty);
}

TEST_CASE("case1 swap solution from direct elimination") {
  // Independent elimination gives Z = (-i sqrt2, 0, 0, i sqrt2), z = 0.
  const Signature sig = builtins::exam_signature();
  const auto c = builtins::exam61_cases().front();
  const AffineSpace swap = find_symmetries(c.pair, SymmetryMode::Swap, sig);
  REQUIRE(!swap.empty);
  CHECK(swap.dimension() == 0);
  Vec Z;
  Scalar z;
  split_parameters(swap.particular, 4, Z, z);
  const Scalar r2 = Scalar::sqrt_d(2);
  CHECK(Z == Vec{-Scalar::i() * r2, Scalar(0), Scalar(0), Scalar::i() * r2});
  CHECK(z.is_zero());
}

TEST_CASE("involutive symmetries are z = 0 slices") {
  const Signature sig = builtins::exam_signature();
  for (const auto& c : builtins::exam61_cases()) {
    for (auto mode : {SymmetryMode::Preserve, SymmetryMode::Swap}) {
      const AffineSpace s = find_symmetries(c.pair, mode, sig);
      if (s.empty) continue;
      Vec Z;
      Scalar z;
      split_parameters(s.particular, 4, Z, z);
      CHECK(is_involutive(make_symmetry(Z, z, sig)) == z.is_zero());
    }
  }
}

TEST_CASE("seeded swapped pairs: solutions contain the generating symmetry") {
  Rng rng(41);
  for (const Signature sig : {Signature{1, 1, 1}, Signature{0, 2, 1}}) {
    const std::size_t N = sig.size(), n = sig.n();
    int solved = 0;
    for (int t = 0; t < 20; ++t) {
      // u is the image of the null vector e_{n+1}; v = s u for an involutive s.
      const Vec u = make_symmetry(rng.complex_vec(n), rng.real(), sig).mat.column(N - 1);
      const Vec Z = rng.complex_vec(n);
      const Vec v = mat_vec(make_symmetry(Z, Scalar(0), sig).mat, u);
      NullLinePair pair{u, v};
      try {
        validate_pair(pair, sig);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const AffineSpace swap = find_symmetries(pair, SymmetryMode::Swap, sig);
      Vec point;
      for (const auto& c : Z) point.push_back(c.re());
      for (const auto& c : Z) point.push_back(c.im());
      point.push_back(Scalar(0));
      // Parameters are ordered (a_1..a_n, b_1..b_n, z).
      CHECK(swap.contains(point));
      if (!swap.empty) ++solved;
      CHECK(!unsound_point(swap, pair, SymmetryMode::Swap, sig));
      const AffineSpace pres = find_symmetries(pair, SymmetryMode::Preserve, sig);
      CHECK(!unsound_point(pres, pair, SymmetryMode::Preserve, sig));
    }
    CHECK(solved > 0);
  }
}
