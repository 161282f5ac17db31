#include "doctest.h"

#include "crsym/linalg.hpp"
#include "crsym/random.hpp"

using namespace crsym;

namespace {

SMat random_matrix(Rng& rng, std::size_t r, std::size_t c, bool sparse = false) {
  SMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!sparse || rng.integer(0, 2) == 0) m(i, j) = rng.complex(rng.coin());
  return m;
}

SMat from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  SMat m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) m(r, c++) = Scalar(v);
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("rref rank and kernel") {
  const SMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  const auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(mat_vec(m, ker[0])));
  const Rref r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(!inverse(m));
}

TEST_CASE("inverse on seeded matrices") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = rng.integer(1, 5);
    const SMat m = random_matrix(rng, n, n);
    auto inv = inverse(m);
    if (!inv) {
      CHECK(rank(m) < n);
      continue;
    }
    CHECK(m * *inv == SMat::identity(n));
    CHECK(*inv * m == SMat::identity(n));
  }
}

TEST_CASE("kernel vectors are annihilated and independent") {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = rng.integer(1, 5), c = rng.integer(1, 6);
    const SMat m = random_matrix(rng, r, c, true);
    const auto ker = kernel(m);
    CHECK(ker.size() + rank(m) == c);
    for (const auto& v : ker) CHECK(is_zero(mat_vec(m, v)));
    CHECK(independent_subset(ker, c).size() == ker.size());
  }
}

TEST_CASE("affine solver soundness") {
  Rng rng(9);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = rng.integer(1, 6), eqs = rng.integer(0, 6);
    std::vector<AffineForm> forms;
    for (std::size_t k = 0; k < eqs; ++k) {
      AffineForm f{Vec(n), rng.integer(0, 3) == 0 ? Scalar(0) : rng.real()};
      for (auto& c : f.coeffs) c = rng.integer(0, 1) ? rng.real() : Scalar(0);
      forms.push_back(f);
    }
    const AffineSpace s = solve_affine(forms, n);
    auto value = [&](const AffineForm& f, const Vec& x) {
      Scalar acc = f.constant;
      for (std::size_t k = 0; k < n; ++k) acc += f.coeffs[k] * x[k];
      return acc;
    };
    if (s.empty) {
      // A combination of the equations reads 0 = nonzero.
      SMat aug(forms.size(), n + 1), coeff(forms.size(), n);
      for (std::size_t r = 0; r < forms.size(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = coeff(r, c) = forms[r].coeffs[c];
        aug(r, n) = forms[r].constant;
      }
      CHECK(rank(aug) > rank(coeff));
      continue;
    }
    for (const auto& f : forms) {
      CHECK(value(f, s.particular).is_zero());
      for (const auto& d : s.directions) CHECK((value(f, s.particular + d) - value(f, s.particular)).is_zero());
    }
    CHECK(s.contains(s.particular));
    CHECK(same_affine(solve_affine(s.equations(), n), s));
  }
}

TEST_CASE("affine containment") {
  // x + y = 1 in R^2
  const AffineSpace s = solve_affine({{Vec{Scalar(1), Scalar(1)}, Scalar(-1)}}, 2);
  CHECK(s.dimension() == 1);
  CHECK(s.contains(Vec{Scalar(3), Scalar(-2)}));
  CHECK(!s.contains(Vec{Scalar(1), Scalar(1)}));
  const AffineSpace none = solve_affine({{Vec{Scalar(0), Scalar(0)}, Scalar(1)}}, 2);
  CHECK(none.empty);
  CHECK(!same_affine(s, none));
}

TEST_CASE("coordinates and solve_unique") {
  const SMat basis = from_rows({{1, 0}, {1, 1}, {0, 1}});
  auto c = coordinates(basis, Vec{Scalar(2), Scalar(5), Scalar(3)});
  REQUIRE(c);
  CHECK(*c == Vec{Scalar(2), Scalar(3)});
  CHECK(!coordinates(basis, Vec{Scalar(1), Scalar(0), Scalar(0)}));
  CHECK(!solve_unique(from_rows({{1, 1}, {2, 2}}), Vec{Scalar(1), Scalar(2)}));
  CHECK_THROWS_AS(from_rows({{1, 2}}) * from_rows({{1, 2}}), DimensionError);
}
