#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crsym/sualg.hpp"

namespace crsym {

struct SymmetryMatrix {
  Vec Z;
  Scalar z;
  Signature sig;
  SMat mat;
};

// s_{Z,z} = [[-1, -Z, iz + ZIZ*/2], [0, E, -IZ*], [0, 0, -1]], validated.
SymmetryMatrix make_symmetry(const Vec& Z, const Scalar& z, const Signature& sig);
bool is_involutive(const SymmetryMatrix& s);

// m(u, v) = sum H_jk u_j conj(v_k).
Scalar hermitian_form(const Vec& u, const Vec& v, const Signature& sig);
// Vanishing of all 2x2 minors of [u, w].
bool same_line(const Vec& u, const Vec& w);

struct NullLinePair {
  Vec u;
  Vec v;
};

void validate_pair(const NullLinePair& pair, const Signature& sig);

enum class OrbitCase { NonIsotropicPair, Case1, Case2, Case3, Case4 };
std::string to_string(OrbitCase c);

OrbitCase classify_pair(const NullLinePair& pair, const Signature& sig);

enum class SymmetryMode { Preserve, Swap };
std::string to_string(SymmetryMode m);

// Solutions over the real coordinates (a_1..a_n, b_1..b_n, z), Z_k = a_k + i b_k.
AffineSpace find_symmetries(const NullLinePair& pair, SymmetryMode mode, const Signature& sig);

// Splits a point of R^{2n+1} into (Z, z).
void split_parameters(const Vec& point, std::size_t n, Vec& Z, Scalar& z);
bool verify_symmetry_mode(const SymmetryMatrix& s, const NullLinePair& pair, SymmetryMode mode);
std::vector<std::string> parameter_names(std::size_t n);

// Back-substitution of the particular point and particular +- each
// direction; returns the first failing point, if any.
std::optional<Vec> unsound_point(const AffineSpace& set, const NullLinePair& pair, SymmetryMode mode, const Signature& sig);

}  // namespace crsym
