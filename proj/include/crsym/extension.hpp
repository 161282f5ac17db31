#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crsym/liealg.hpp"
#include "crsym/sualg.hpp"

namespace crsym {

struct ExtensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NormalizationError : std::runtime_error {
  NormalizationError(const std::string& msg, std::size_t kernel_dim = 0)
      : std::runtime_error(msg), kernel_dimension(kernel_dim) {}
  std::size_t kernel_dimension;
};

// A linear map alpha: k -> su(p+1,q+1) given on a basis of k, with l spanned
// by the basis vectors listed in l_indices. Entries may contain the
// (real) unknowns named in `unknowns`; `constraints` are extra polynomial
// equations p = 0 on them.
struct Extension {
  int d = kDefaultD;
  Signature sig;
  LieAlg k;
  std::vector<std::size_t> l_indices;
  std::vector<PMat> alpha;
  std::vector<std::string> unknowns;
  std::vector<Poly> constraints;

  std::vector<std::size_t> complement() const;
  bool in_l(std::size_t i) const;
  bool has_unknowns() const;
  PMat alpha_of(const Vec& coords) const;
};

struct StructureReport {
  bool shapes = true;
  bool members = true;
  bool subalgebra = true;
  bool isomorphism = true;
  bool equivariant = true;
  std::vector<std::string> issues;

  bool ok() const { return shapes && members && subalgebra && isomorphism && equivariant; }
};

// Subalgebra closure of l, alpha-bar isomorphism, equivariance and membership.
StructureReport check_structure(const Extension& ext);

// tau(X_i, X_j) = [alpha(X_i), alpha(X_j)] - alpha([X_i, X_j]).
PMat tau(const Extension& ext, std::size_t i, std::size_t j);

struct CurvatureEntry {
  std::size_t i, j;
  PMat value;
  bool in_p;
};
using CurvatureTable = std::vector<CurvatureEntry>;

// All pairs i < j, with a flag for values escaping p.
CurvatureTable curvature_table(const Extension& ext);
// Same table; throws ExtensionError naming the first pair escaping p.
CurvatureTable curvature(const Extension& ext);
bool is_flat(const Extension& ext);

struct WeylEntry {
  std::size_t i, j;
  PMat value;
};
std::vector<WeylEntry> weyl_component(const Extension& ext);
bool weyl_is_zero(const Extension& ext);

// Matrix of alpha-bar: k/l -> g_-, columns indexed by complement().
SMat alpha_bar(const Extension& ext);

// d*kappa evaluated on alpha-bar of each complement basis vector.
std::vector<PMat> kostant_codifferential(const Extension& ext);
bool is_normal(const Extension& ext);

struct NormalizationResult {
  Extension ext;
  Assignment solution;
  std::size_t equations = 0;
  std::size_t passes = 0;
};
NormalizationResult solve_normalization(const Extension& skeleton);

struct InclusionVerdict {
  bool ok = true;
  std::optional<std::size_t> offender;  // index into the supplied basis
};

struct SymmetricFormReport {
  InclusionVerdict m;  // alpha(m) in C^n + C^n*
  InclusionVerdict l;  // alpha(l) in u(p,q)
  InclusionVerdict h;  // alpha(h) in R + csu(p,q) + R*
  bool ok() const { return m.ok && l.ok && h.ok; }
};
SymmetricFormReport check_symmetric_form(const Extension& ext, const std::vector<Vec>& h_basis, const std::vector<Vec>& m_basis);

struct WeylDescriptor {
  std::vector<SMat> gamma;  // one endomorphism of k/l per basis vector of k
  bool l_consistent = true;
  std::vector<std::size_t> l_mismatch;
};
WeylDescriptor invariant_weyl_descriptor(const Extension& ext);

bool metrizability_check(const Extension& ext);

struct NijenhuisReport {
  bool cn_cn = true;  // X, Y in C^n
  bool cn_r = true;   // X in C^n, Y in R
  bool cn_gr = true;  // X in C^n, Y the grading element
  bool r_gr = true;   // X in R, Y the grading element
  bool rest = true;   // remaining pairs
  bool ok() const { return cn_cn && cn_r && cn_gr && r_gr && rest; }
};
NijenhuisReport nijenhuis_check(const Extension& ext);

}  // namespace crsym
