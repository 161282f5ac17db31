#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "crsym/cralgebra.hpp"
#include "crsym/extension.hpp"
#include "crsym/symmetries.hpp"

namespace crsym {

using Json = nlohmann::ordered_json;

// Raised for malformed input; the message names the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json to_json(const Scalar& s);
Json to_json(const Poly& p);
Json to_json(const Vec& v);
Json to_json(const SMat& m);
// Constant entries as scalar 4-arrays, others as {"poly": [{"m": {...}, "c": [...]}]}.
Json to_json(const PMat& m);
Json to_json(const Signature& sig);
Json to_json(const LieAlg& k);
Json to_json(const AffineSpace& s);
Json to_json(const Extension& ext);
Json to_json(const CrAlgebra& cr);
Json to_json(const BasisChoice& ch);

Scalar scalar_from_json(const Json& j, int d, const std::string& where);
Poly poly_from_json(const Json& j, int d, const std::string& where);
Vec vec_from_json(const Json& j, int d, const std::string& where);
SMat smat_from_json(const Json& j, int d, const std::string& where);
PMat pmat_from_json(const Json& j, int d, const std::string& where);
Signature signature_from_json(const Json& j, const std::string& where);
LieAlg liealg_from_json(const Json& j, const std::string& where);
Extension extension_from_json(const Json& j);
CrAlgebra cralgebra_from_json(const Json& j);
// Vectors are read in the field of `d`.
BasisChoice choice_from_json(const Json& j, int d);

Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);
// Two-space indented dump with keys in insertion order.
std::string canonical_dump(const Json& j);

}  // namespace crsym
