#include "crsym/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "crsym/builtins.hpp"
#include "crsym/serialize.hpp"

namespace crsym {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { rep_.builtin = std::move(name); }

  void check(const std::string& name, const std::function<bool(std::string&)>& body) {
    CheckLine line{name, false, ""};
    try {
      line.pass = body(line.detail);
    } catch (const std::exception& e) {
      line.pass = false;
      line.detail = std::string("exception: ") + e.what();
    }
    rep_.checks.push_back(std::move(line));
  }
  VerifyReport take() { return std::move(rep_); }

 private:
  VerifyReport rep_;
};

bool same_extension(const Extension& a, const Extension& b) { return canonical_dump(to_json(a)) == canonical_dump(to_json(b)); }

void flat_suite(Suite& s, const std::vector<SMat>& gens) {
  const Signature sig = builtins::sp_signature();
  s.check("membership of every generator", [&](std::string& why) {
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (!is_member(gens[k], sig)) {
        why = "generator " + builtins::sp_names()[k] + " is not in su(2,2)";
        return false;
      }
    return true;
  });
  s.check("span is a 10-dimensional subalgebra", [&](std::string& why) {
    std::vector<Vec> cols;
    for (const auto& g : gens) cols.push_back(realify(g));
    const std::size_t r = rank(from_columns(cols, cols[0].size()));
    for (const auto& a : gens)
      for (const auto& b : gens) {
        auto with = cols;
        with.push_back(realify(bracket(a, b)));
        if (rank(from_columns(with, cols[0].size())) != r) {
          why = "bracket leaves the span";
          return false;
        }
      }
    why = "rank " + std::to_string(r);
    return r == 10;
  });
  const Extension ext = builtins::sp_extension(gens);
  s.check("Jacobi identity", [&](std::string&) { return ext.k.satisfies_jacobi(); });
  s.check("extension conditions", [&](std::string& why) {
    StructureReport st = check_structure(ext);
    if (!st.ok()) why = st.issues.front();
    return st.ok();
  });
  s.check("flat", [&](std::string&) { return is_flat(ext); });
  s.check("normal", [&](std::string&) { return is_normal(ext); });
  s.check("CR algebra pipeline: flat, locally symmetric", [&](std::string& why) {
    CrReport rep = check_symmetric(builtins::sp_cr_algebra(gens), builtins::sp_choice(gens));
    why = to_string(rep.verdict) + ", l -> csu kernel dimension " + std::to_string(rep.injectivity.kernel_dimension);
    return rep.verdict == Verdict::FlatLocallySymmetric && rep.extension && is_flat(*rep.extension) &&
           is_normal(*rep.extension);
  });
}

VerifyReport verify_e2() {
  Suite s("e2");
  const Extension ext = builtins::e2_extension();
  s.check("extension conditions", [&](std::string& why) {
    StructureReport st = check_structure(ext);
    if (!st.ok()) why = st.issues.front();
    return st.ok();
  });
  s.check("normalization reproduces alpha", [&](std::string& why) {
    NormalizationResult res = solve_normalization(builtins::e2_skeleton());
    why = std::to_string(res.equations) + " equations, " + std::to_string(res.passes) + " passes";
    return res.ext.alpha == ext.alpha;
  });
  s.check("tau table", [&](std::string&) {
    return to_scalar(tau(ext, 0, 1)) == builtins::e2_tau_x_X1() && to_scalar(tau(ext, 0, 2)) == builtins::e2_tau_x_X2() &&
           tau(ext, 1, 2).is_zero();
  });
  s.check("normal", [&](std::string&) { return is_normal(ext); });
  s.check("not flat", [&](std::string&) { return !is_flat(ext); });
  s.check("Weyl component vanishes", [&](std::string&) { return weyl_is_zero(ext); });
  s.check("metrizable", [&](std::string&) { return metrizability_check(ext); });
  s.check("Nijenhuis tensor vanishes", [&](std::string&) { return nijenhuis_check(ext).ok(); });
  s.check("perturbed rho2 is not normal", [&](std::string&) {
    Extension bad = ext;
    bad.alpha[0](0, 2) = Poly();
    return !is_normal(bad);
  });
  s.check("CR algebra pipeline reproduces the extension", [&](std::string& why) {
    CrReport rep = check_symmetric(builtins::e2_cr_algebra(), builtins::e2_choice());
    why = to_string(rep.verdict);
    return rep.verdict == Verdict::Symmetric && rep.extension && same_extension(*rep.extension, ext);
  });
  s.check("parity-mixing choice is rejected", [&](std::string& why) {
    CrReport rep = check_symmetric(builtins::e2_cr_algebra(), builtins::e2_parity_mixing_choice());
    why = to_string(rep.verdict);
    return rep.verdict == Verdict::NotSymmetricForChoice && !rep.nu.bracket_route;
  });
  s.check("distinguished point on the variety", [&](std::string&) {
    VarietyMatch m = verify_variety_membership(builtins::e2_distinguished_frame());
    const std::array<Scalar, 6> want{Scalar(1), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    return m.member && m.params == want;
  });
  s.check("search family contains the distinguished point", [&](std::string&) {
    SearchOptions opts;
    opts.max_samples = 16;
    SearchResult res = search_symmetric(builtins::e2_cr_algebra(), opts);
    return std::any_of(res.gauges.begin(), res.gauges.end(),
                       [](const SearchGauge& g) { return g.contains(builtins::e2_distinguished_frame()); });
  });
  s.check("serialization round trip", [&](std::string&) {
    return extension_from_json(parse_json(canonical_dump(to_json(ext)))).alpha == ext.alpha &&
           cralgebra_from_json(to_json(builtins::e2_cr_algebra())).q_basis == builtins::e2_cr_algebra().q_basis;
  });
  return s.take();
}

VerifyReport verify_standard(std::uint64_t seed) {
  Suite s("standard");
  Rng rng(seed);
  for (const Signature sig : {Signature{0, 1, 1}, Signature{1, 1, 1}, Signature{2, 2, 1}}) {
    const std::string tag = " " + sig.str();
    s.check("s*Hs = H on 20 samples" + tag, [&](std::string& why) {
      const SMat H = hermitian_form_matrix(sig);
      for (int t = 0; t < 20; ++t) {
        Vec Z = rng.complex_vec(sig.n());
        Scalar z = rng.coin() ? Scalar() : rng.real();
        SymmetryMatrix sm = make_symmetry(Z, z, sig);
        if (conj_transpose(sm.mat) * H * sm.mat != H) {
          why = "fails at z = " + z.str();
          return false;
        }
        const SMat sq = sm.mat * sm.mat;
        SMat want = SMat::identity(sig.size());
        want(0, sig.size() - 1) = Scalar(-2) * Scalar::i() * z;
        if (is_involutive(sm) != z.is_zero() || sq != want) {
          why = "involutivity or square mismatch at z = " + z.str();
          return false;
        }
      }
      return true;
    });
  }
  const Signature sig = builtins::standard_signature();
  const Extension ext = builtins::standard_extension(sig);
  s.check("identity inclusion is an extension", [&](std::string& why) {
    StructureReport st = check_structure(ext);
    if (!st.ok()) why = st.issues.front();
    return st.ok();
  });
  s.check("identity inclusion is flat", [&](std::string&) { return is_flat(ext); });
  s.check("identity inclusion is normal", [&](std::string&) { return is_normal(ext); });
  s.check("Nijenhuis tensor vanishes", [&](std::string&) { return nijenhuis_check(ext).ok(); });
  s.check("CR algebra gives l = p", [&](std::string& why) {
    LeviData levi = derive_l_and_H(builtins::standard_cr_algebra(sig));
    why = "dim l = " + std::to_string(levi.l_basis.size());
    return levi.l_basis.size() == ext.l_indices.size();
  });
  s.check("CR algebra pipeline: flat, locally symmetric", [&](std::string& why) {
    CrReport rep = check_symmetric(builtins::standard_cr_algebra(sig), builtins::standard_choice(sig));
    why = to_string(rep.verdict) + ", l -> csu kernel dimension " + std::to_string(rep.injectivity.kernel_dimension);
    return rep.verdict == Verdict::FlatLocallySymmetric;
  });
  return s.take();
}

void case_suite(Suite& s, const builtins::SymmetryCase& c, const Signature& sig) {
  s.check(c.name + " orbit case", [&](std::string& why) {
    OrbitCase got = classify_pair(c.pair, sig);
    why = to_string(got);
    return c.orbit && got == *c.orbit;
  });
  for (SymmetryMode mode : {SymmetryMode::Preserve, SymmetryMode::Swap}) {
    const AffineSpace& want = mode == SymmetryMode::Preserve ? c.preserve : c.swap;
    s.check(c.name + " " + to_string(mode), [&, mode](std::string& why) {
      AffineSpace got = find_symmetries(c.pair, mode, sig);
      if (got.empty)
        why = "empty";
      else
        why = "dimension " + std::to_string(got.dimension()) + ", particular " + to_json(got.particular).dump();
      if (unsound_point(got, c.pair, mode, sig)) {
        why += "; back-substitution fails";
        return false;
      }
      return same_affine(got, want);
    });
  }
}

VerifyReport verify_exam61() {
  Suite s("exam61");
  for (const auto& c : builtins::exam61_cases()) case_suite(s, c, builtins::exam_signature());
  return s.take();
}

VerifyReport verify_exam62() {
  Suite s("exam62");
  case_suite(s, builtins::exam62_case(), builtins::exam_signature());
  return s.take();
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

VerifyReport verify_builtin(const std::string& name, std::uint64_t seed) {
  if (name == "e2") return verify_e2();
  if (name == "sp11" || name == "sp4r") {
    Suite s(name);
    flat_suite(s, name == "sp11" ? builtins::sp11_generators() : builtins::sp4r_generators());
    return s.take();
  }
  if (name == "standard") return verify_standard(seed);
  if (name == "exam61") return verify_exam61();
  if (name == "exam62") return verify_exam62();
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

}  // namespace crsym
