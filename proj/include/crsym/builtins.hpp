#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crsym/cralgebra.hpp"
#include "crsym/symmetries.hpp"

namespace crsym::builtins {

std::vector<std::string> names();

// e(2) in the basis (x, X1, X2) with [X1, x] = X2/2 and [X1, X2] = -2x.
LieAlg e2_algebra();
// Reference normal extension, signature (0,1) with I = +1.
Extension e2_extension();
// Skeleton with unknowns built from the e2 CR algebra and its choice.
Extension e2_skeleton();
// Expected tau on (x, X1), (x, X2); tau(X1, X2) = 0.
SMat e2_tau_x_X1();
SMat e2_tau_x_X2();
// e(2) in the basis (e1, e2, r) with [r, e1] = e2, [r, e2] = -e1.
LieAlg e2_standard_algebra();
// Frame (T, xi, J xi) in the basis (e1, e2, r) of the distinguished point.
SMat e2_distinguished_frame();
CrAlgebra e2_cr_algebra();
BasisChoice e2_choice();
// Complement e1/2 + r mixes the nu-parities.
BasisChoice e2_parity_mixing_choice();

// Generators ordered (l1..l5, x, X1..X4); l spanned by the first five.
std::vector<SMat> sp11_generators();
std::vector<SMat> sp4r_generators();
std::vector<std::string> sp_names();
Signature sp_signature();
// Inclusion extension of the span of the generators.
Extension sp_extension(const std::vector<SMat>& gens);
CrAlgebra sp_cr_algebra(const std::vector<SMat>& gens);
BasisChoice sp_choice(const std::vector<SMat>& gens);

// Identity inclusion of su(p+1,q+1) with l = p.
Signature standard_signature();
Extension standard_extension(const Signature& sig);
CrAlgebra standard_cr_algebra(const Signature& sig);
BasisChoice standard_choice(const Signature& sig);

// One line-pair case with its expected solution sets over (a, b, z).
struct SymmetryCase {
  std::string name;
  NullLinePair pair;
  std::optional<OrbitCase> orbit;
  AffineSpace preserve;
  AffineSpace swap;
};
Signature exam_signature();
std::vector<SymmetryCase> exam61_cases();
SymmetryCase exam62_case();

}  // namespace crsym::builtins
