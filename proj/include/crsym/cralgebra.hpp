#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crsym/extension.hpp"

namespace crsym {

struct CrAlgebraError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A real Lie algebra k with a complex subalgebra q of its complexification.
// Complex coordinate vectors u + i w are stored as single Vec with entries in F.
struct CrAlgebra {
  int d = kDefaultD;
  LieAlg k;
  std::vector<Vec> q_basis;

  // Bracket in the complexification.
  Vec bracket(const Vec& u, const Vec& v) const;
  void validate() const;
};

// Step (3) data: the transversal element T and representatives xi_j of a
// complex basis of H/l. Optional fields fix J xi_j, alpha on the l basis
// returned by derive_l_and_H, or a complete homomorphism alpha on k.
struct BasisChoice {
  Vec complement;
  std::vector<Vec> representatives;
  std::vector<Vec> j_images;
  std::vector<SMat> l_alpha;
  std::vector<SMat> flat_alpha;
  std::optional<Signature> flat_signature;
};

struct LeviData {
  std::vector<Vec> l_basis;
  std::vector<Vec> H_basis;  // real points of q + conj(q), l included
  std::size_t n = 0;
  std::pair<std::size_t, std::size_t> levi_signature{0, 0};
};

LeviData derive_l_and_H(const CrAlgebra& cr);
// A real representative of J(xi) modulo l for xi in H.
Vec apply_J(const CrAlgebra& cr, const Vec& xi);

// The basis [T, xi_1, J xi_1, ..., xi_n, J xi_n, l_1, ...] with the Levi form
// brought to the standard shape of the chosen signature.
struct AdaptedFrame {
  std::vector<Vec> basis;
  LieAlg k;
  Signature sig;
  std::vector<std::size_t> l_indices;
};

AdaptedFrame adapted_frame(const CrAlgebra& cr, const LeviData& levi, const BasisChoice& choice);

enum class Injectivity { Injective, NotInjectiveHenceFlat };
std::string to_string(Injectivity v);

struct InjectivityResult {
  Injectivity verdict = Injectivity::Injective;
  std::size_t kernel_dimension = 0;
  std::vector<SMat> images;  // grade-0 element of su for each l basis vector
};

// The map l -> csu(p,q) given by the action on gr(k/l).
InjectivityResult injectivity_shortcut(const AdaptedFrame& frame);

// Skeleton alpha with unknowns a, k_j (A = I K), r (rho_2), s_b_k/t_b_k (rho_1).
Extension make_skeleton(const AdaptedFrame& frame, const std::vector<SMat>& l_alpha, int d);

struct NuTestResult {
  bool tau_route = true;
  bool bracket_route = true;
  std::vector<std::string> violations;
  bool ok() const { return tau_route && bracket_route; }
};

NuTestResult nu_automorphism_test(const CrAlgebra& cr, const BasisChoice& choice);
NuTestResult nu_automorphism_test(const AdaptedFrame& frame, const Extension& skeleton);

enum class Verdict { Symmetric, NotSymmetricForChoice, FlatLocallySymmetric };
std::string to_string(Verdict v);

struct CrReport {
  Verdict verdict = Verdict::NotSymmetricForChoice;
  LeviData levi;
  Signature sig;
  InjectivityResult injectivity;
  NuTestResult nu;
  std::optional<Extension> extension;
  std::vector<std::string> notes;
  std::vector<std::string> not_checked;
};

CrReport check_symmetric(const CrAlgebra& cr, const BasisChoice& choice);

struct VarietyMatch {
  bool member = false;
  std::array<Scalar, 6> params{};
};

VarietyMatch verify_variety_membership(const SMat& B_inv);

struct SearchOptions {
  bool free_q = false;
  std::vector<Scalar> grid{Scalar(-1), Scalar(0), Scalar(1), Scalar(2)};
  std::size_t max_samples = 4096;
};

// One Levi gauge (sign of I) of the search system.
struct SearchGauge {
  int i_sign = 1;
  bool consistent = true;
  std::vector<std::string> frame_unknowns;  // entries of T, xi, J xi
  std::vector<std::string> aux_unknowns;    // m_ab with [T, xi_a] = sum_b m_ab xi_b
  std::vector<Poly> equations;              // before elimination
  std::map<std::string, Poly> eliminated;   // solved unknowns
  std::vector<Poly> residual;               // remaining constraint system
  std::vector<std::string> free_unknowns;

  // Whether the frame given by the columns of B (T, xi_1, J xi_1, ...)
  // lies in the solved family.
  bool contains(const SMat& B) const;
};

struct SearchSample {
  SMat B;
  Verdict verdict;
  std::optional<Extension> extension;
};

struct SearchResult {
  std::vector<SearchGauge> gauges;
  std::vector<SearchSample> samples;
  bool globally_not_symmetric = false;
};

SearchResult search_symmetric(const CrAlgebra& cr, const SearchOptions& opts = {});

// CR algebra with q spanned by xi_j + i J xi_j for the frame columns
// (T, xi_1, J xi_1, ...); l = 0.
CrAlgebra cr_algebra_from_frame(const LieAlg& k, const SMat& B, int d = kDefaultD);
BasisChoice choice_from_frame(const SMat& B);
// q = alpha_C^{-1}(p_C + span{X(e_k) + i X(i e_k)}).
CrAlgebra cr_algebra_from_extension(const Extension& ext);

}  // namespace crsym
