#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "crsym/builtins.hpp"
#include "crsym/random.hpp"
#include "crsym/serialize.hpp"

using namespace crsym;

TEST_CASE("scalar and poly round trip") {
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 100; ++t) {
    const Scalar s = rng.complex(true);
    CHECK(scalar_from_json(to_json(s), 2, "s") == s);
    const Poly p = Poly(rng.complex()) * Poly::var("a") * Poly::var("b") + Poly(rng.complex(true)) + Poly::var("c");
    CHECK(poly_from_json(to_json(p), 2, "p") == p);
  }
}

TEST_CASE("extension round trip is byte stable") {
  for (const Extension& ext : {builtins::e2_extension(), builtins::e2_skeleton(),
                               builtins::sp_extension(builtins::sp11_generators()),
                               builtins::standard_extension({1, 1, 1})}) {
    const std::string a = canonical_dump(to_json(ext));
    const Extension back = extension_from_json(parse_json(a));
    CHECK(canonical_dump(to_json(back)) == a);
    CHECK(back.k == ext.k);
    CHECK(back.alpha == ext.alpha);
    CHECK(back.constraints == ext.constraints);
  }
}

TEST_CASE("CR algebra and choice round trip") {
  const CrAlgebra cr = builtins::e2_cr_algebra();
  const CrAlgebra cr2 = cralgebra_from_json(parse_json(canonical_dump(to_json(cr))));
  CHECK(cr2.k == cr.k);
  CHECK(cr2.q_basis == cr.q_basis);
  for (const BasisChoice& ch : {builtins::e2_choice(), builtins::sp_choice(builtins::sp4r_generators())}) {
    const std::string a = canonical_dump(to_json(ch));
    CHECK(canonical_dump(to_json(choice_from_json(parse_json(a), 2))) == a);
  }
}

TEST_CASE("affine space output") {
  const AffineSpace s = solve_affine({{Vec{Scalar(1), Scalar(1)}, Scalar(-1)}}, 2);
  const Json j = to_json(s);
  CHECK(j["dimension"] == 1);
  CHECK(j["empty"] == false);
}

TEST_CASE("malformed input names the field") {
  Json j = to_json(builtins::e2_extension());
  j.erase("alpha");
  CHECK_THROWS_WITH_AS(extension_from_json(j), doctest::Contains("alpha"), ParseError);

  Json bad = to_json(builtins::e2_extension());
  bad["alpha"][1][0][0] = Json::array({"1/0", "0", "0", "0"});
  CHECK_THROWS_AS(extension_from_json(bad), ParseError);

  Json bad_sig = to_json(builtins::e2_extension());
  bad_sig["signature"]["p"] = "two";
  CHECK_THROWS_WITH_AS(extension_from_json(bad_sig), doctest::Contains("signature"), ParseError);

  CHECK_THROWS_AS(scalar_from_json(Json::array({"1", "2"}), 2, "x"), ParseError);
  CHECK_THROWS_AS(parse_json("{\"a\": [1, 2"), ParseError);
}

TEST_CASE("file diagnostics carry a position") {
  const std::string path = "crsym_test_broken.json";
  {
    std::ofstream out(path);
    out << "{\n  \"d\": 2,\n  \"k\": [\n}\n";
  }
  CHECK_THROWS_WITH_AS(load_json_file(path), doctest::Contains("line"), ParseError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_json_file("does/not/exist.json"), ParseError);
}
