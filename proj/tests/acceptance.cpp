#include <functional>
#include <iostream>
#include <sstream>

#include "crsym/builtins.hpp"
#include "crsym/random.hpp"
#include "crsym/serialize.hpp"

using namespace crsym;

namespace {

// Collects failed sub-checks of one criterion.
class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool pass() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }
Scalar qi(long num, long den = 1) { return Scalar(0, Rational(num, den)); }

SMat mat3(std::initializer_list<Scalar> entries) {
  SMat m(3, 3);
  std::size_t k = 0;
  for (const auto& e : entries) {
    m(k / 3, k % 3) = e;
    ++k;
  }
  return m;
}

std::string affine_str(const AffineSpace& s) { return to_json(s).dump(); }

void normalization(Criterion& c) {
  // Reference alpha on x, X1, X2 and tau on (x, X1), (x, X2).
  const std::vector<SMat> alpha{
      mat3({qi(1, 16), 0, qi(-15, 256), 0, qi(-1, 8), 0, qi(1), 0, qi(1, 16)}),
      mat3({0, q(-5, 16), 0, q(1), 0, q(5, 16), 0, q(-1), 0}),
      mat3({0, qi(-3, 16), 0, qi(1), 0, qi(-3, 16), 0, qi(1), 0}),
  };
  const SMat tau_x_X1 = mat3({0, qi(-3, 32), 0, 0, 0, qi(-3, 32), 0, 0, 0});
  const SMat tau_x_X2 = mat3({0, q(3, 32), 0, 0, 0, q(-3, 32), 0, 0, 0});

  const NormalizationResult res = solve_normalization(builtins::e2_skeleton());
  for (std::size_t k = 0; k < 3; ++k) {
    const SMat got = to_scalar(res.ext.alpha[k]);
    c.require(got == alpha[k], "alpha(" + res.ext.k.names[k] + ") = " + to_string(got));
  }
  const std::vector<std::tuple<std::size_t, std::size_t, SMat>> expected{
      {0, 1, tau_x_X1}, {0, 2, tau_x_X2}, {1, 2, SMat(3, 3)}};
  for (const auto& [i, j, t] : expected) {
    const SMat got = to_scalar(tau(res.ext, i, j));
    c.require(got == t, "tau(" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(got));
  }
  c.require(is_normal(res.ext), "solved extension is normal");
}

void line_pair_examples(Criterion& c, Criterion& sound) {
  const Signature sig = builtins::exam_signature();
  for (const auto& ex : builtins::exam61_cases()) {
    for (auto mode : {SymmetryMode::Preserve, SymmetryMode::Swap}) {
      const AffineSpace got = find_symmetries(ex.pair, mode, sig);
      const AffineSpace& want = mode == SymmetryMode::Preserve ? ex.preserve : ex.swap;
      std::string evidence = ex.name + " " + to_string(mode) + ": computed " + affine_str(got) + ", expected " + affine_str(want);
      if (!same_affine(got, want) && !want.empty) {
        Vec Z;
        Scalar z;
        split_parameters(want.particular, sig.n(), Z, z);
        const bool expected_ok = verify_symmetry_mode(make_symmetry(Z, z, sig), ex.pair, mode);
        evidence += "; expected point " + std::string(expected_ok ? "is" : "is not") + " a symmetry of this kind";
      }
      c.require(same_affine(got, want), evidence);
      auto bad = unsound_point(got, ex.pair, mode, sig);
      sound.require(!bad, ex.name + " " + to_string(mode) + " fails at " + (bad ? to_json(*bad).dump() : ""));
    }
    if (ex.orbit) c.require(classify_pair(ex.pair, sig) == *ex.orbit, ex.name + " orbit case");
  }
}

void non_isotropic_example(Criterion& c, Criterion& sound) {
  const Signature sig = builtins::exam_signature();
  const auto ex = builtins::exam62_case();
  for (auto mode : {SymmetryMode::Preserve, SymmetryMode::Swap}) {
    const AffineSpace got = find_symmetries(ex.pair, mode, sig);
    c.require(got.empty, to_string(mode) + ": " + affine_str(got));
    sound.require(!unsound_point(got, ex.pair, mode, sig), "exam62 " + to_string(mode));
  }
}

void standard_symmetries(Criterion& c) {
  Rng rng(kDefaultSeed);
  for (const Signature sig : {Signature{0, 1, 1}, Signature{1, 1, 1}, Signature{2, 2, 1}}) {
    const SMat H = hermitian_form_matrix(sig);
    for (int t = 0; t < 20; ++t) {
      const Vec Z = rng.complex_vec(sig.n());
      const Scalar z = t % 4 == 0 ? Scalar(0) : rng.real();
      const SymmetryMatrix s = make_symmetry(Z, z, sig);
      const std::string tag = sig.str() + " sample " + std::to_string(t);
      c.require(conj_transpose(s.mat) * H * s.mat == H, tag + ": s*Hs != H");
      c.require(is_involutive(s) == z.is_zero(), tag + ": involutivity");
      SMat sq = SMat::identity(sig.size());
      sq(0, sig.size() - 1) = Scalar(-2) * Scalar::i() * z;
      c.require(s.mat * s.mat == sq, tag + ": s^2");
    }
  }
}

void flat_builtins(Criterion& c) {
  for (const auto& [name, gens] : {std::pair{"sp11", builtins::sp11_generators()},
                                   std::pair{"sp4r", builtins::sp4r_generators()}}) {
    const Signature sig = builtins::sp_signature();
    for (std::size_t k = 0; k < gens.size(); ++k)
      c.require(is_member(gens[k], sig), std::string(name) + " generator " + builtins::sp_names()[k]);
    std::vector<Vec> rows;
    for (const auto& g : gens) rows.push_back(realify(g));
    const std::size_t base = independent_subset(rows, rows.front().size()).size();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) rows.push_back(realify(bracket(gens[i], gens[j])));
    const std::size_t closed = independent_subset(rows, rows.front().size()).size();
    c.require(base == 10 && closed == 10, std::string(name) + " rank " + std::to_string(base) + " -> " + std::to_string(closed));
    const Extension ext = builtins::sp_extension(gens);
    c.require(check_structure(ext).ok(), std::string(name) + " extension conditions");
    c.require(is_flat(ext), std::string(name) + " flat");
    c.require(is_normal(ext), std::string(name) + " normal");
  }
}

void structural(Criterion& c) {
  c.require(builtins::e2_algebra().satisfies_jacobi(), "Jacobi e2");
  c.require(builtins::e2_standard_algebra().satisfies_jacobi(), "Jacobi e2 standard basis");
  c.require(builtins::sp_extension(builtins::sp11_generators()).k.satisfies_jacobi(), "Jacobi sp11");
  c.require(builtins::sp_extension(builtins::sp4r_generators()).k.satisfies_jacobi(), "Jacobi sp4r");
  c.require(builtins::standard_extension(builtins::standard_signature()).k.satisfies_jacobi(), "Jacobi standard");

  Rng rng(kDefaultSeed);
  for (const Signature sig : {Signature{0, 1, 1}, Signature{1, 1, 1}, Signature{2, 2, 1}}) {
    const SMat E = grading_element(sig);
    const auto gm = gminus_basis(sig), pp = pplus_basis(sig);
    const std::vector<std::pair<int, std::vector<SMat>>> blocks{{-2, {gm.front()}},
                                                                {-1, std::vector<SMat>(gm.begin() + 1, gm.end())},
                                                                {0, g0_basis(sig)},
                                                                {1, std::vector<SMat>(pp.begin() + 1, pp.end())},
                                                                {2, {pp.front()}}};
    for (const auto& [g, basis] : blocks)
      for (const auto& b : basis) c.require(bracket(E, b) == Scalar(g) * b, sig.str() + " eigenvalue " + std::to_string(g));

    for (int t = 0; t < 10; ++t) {
      const auto parts = decompose(grade_project(rng.member(sig), 0, sig), sig);
      const CsuSplit split = u_pq_complement_split(parts.a, parts.A, sig);
      auto u = parts;
      u.a = split.u_a;
      const SMat rebuilt = assemble(u, sig) + split.gr_coefficient * E;
      c.require(rebuilt == assemble(parts, sig) && (split.u_a + split.u_a.conj()).is_zero() && split.gr_coefficient.is_real(),
                sig.str() + " csu split");
    }

    const Inertia in = inertia(levi_gram(sig));
    c.require(in.zero == 0 && std::min(in.pos, in.neg) == 2 * std::size_t(std::min(sig.p, sig.q)) &&
                  std::max(in.pos, in.neg) == 2 * std::size_t(std::max(sig.p, sig.q)),
              sig.str() + " Levi inertia " + std::to_string(in.pos) + "," + std::to_string(in.neg));
    c.require(inverse(pairing_gram(sig)).has_value(), sig.str() + " trace pairing degenerate");
  }
}

void nijenhuis(Criterion& c) {
  const std::vector<std::pair<std::string, Extension>> cases{
      {"e2", builtins::e2_extension()}, {"standard", builtins::standard_extension(builtins::standard_signature())}};
  for (const auto& [name, ext] : cases) {
    const NijenhuisReport r = nijenhuis_check(ext);
    c.require(r.cn_cn, name + " (C^n, C^n)");
    c.require(r.cn_r, name + " (C^n, R)");
    c.require(r.cn_gr, name + " (C^n, E_gr)");
    c.require(r.r_gr, name + " (R, E_gr)");
    c.require(r.rest, name + " remaining pairs");
  }
}

void variety(Criterion& c) {
  const VarietyMatch m = verify_variety_membership(mat3({q(1, 2), 0, 0, 0, 0, 1, 0, 1, 0}));
  c.require(m.member, "distinguished point on the variety");
  c.require(m.params == std::array<Scalar, 6>{q(1), q(1), q(0), q(0), q(0), q(0)}, "parameters (1,1,0,0,0,0)");

  const CrReport rep = check_symmetric(builtins::e2_cr_algebra(), builtins::e2_choice());
  c.require(rep.verdict == Verdict::Symmetric, "pipeline verdict " + to_string(rep.verdict));
  if (rep.extension) {
    const std::string got = canonical_dump(to_json(*rep.extension));
    const std::string want = canonical_dump(to_json(builtins::e2_extension()));
    c.require(got == want, "canonical serialization differs from the e2 builtin");
  }

  const SearchResult res = search_symmetric(builtins::e2_cr_algebra());
  bool contains = false, low_degree = true;
  for (const auto& g : res.gauges) {
    if (g.consistent && g.contains(builtins::e2_distinguished_frame())) contains = true;
    for (const auto& [name, value] : g.eliminated) low_degree = low_degree && value.degree() <= 2;
    for (const auto& e : g.residual) low_degree = low_degree && e.degree() <= 3;
  }
  c.require(contains, "search family contains the distinguished frame");
  c.require(low_degree, "search constraints are affine or quadratic in the frame");
}

}  // namespace

int main() {
  struct Entry {
    std::string title;
    Criterion c;
  };
  std::vector<Entry> entries{{"1 E(2) normalization and curvature", {}},
                             {"2 line-pair example in signature (2,2)", {}},
                             {"3 non-isotropic line pair", {}},
                             {"4 standard symmetries", {}},
                             {"5 flat builtins", {}},
                             {"6 structural properties", {}},
                             {"7 Nijenhuis vanishing", {}},
                             {"8 E(2) variety, pipeline and search", {}},
                             {"9 solver soundness", {}}};
  auto run = [&](std::size_t k, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      entries[k].c.require(false, std::string("exception: ") + e.what());
    }
  };
  run(0, [&] { normalization(entries[0].c); });
  run(1, [&] { line_pair_examples(entries[1].c, entries[8].c); });
  run(2, [&] { non_isotropic_example(entries[2].c, entries[8].c); });
  run(3, [&] { standard_symmetries(entries[3].c); });
  run(4, [&] { flat_builtins(entries[4].c); });
  run(5, [&] { structural(entries[5].c); });
  run(6, [&] { nijenhuis(entries[6].c); });
  run(7, [&] { variety(entries[7].c); });

  int failed = 0;
  for (const auto& e : entries) {
    std::cout << (e.c.pass() ? "PASS " : "FAIL ") << e.title << " (" << e.c.checks() << " checks)\n";
    for (const auto& f : e.c.failures()) std::cout << "     " << f << "\n";
    if (!e.c.pass()) ++failed;
  }
  std::cout << (entries.size() - failed) << "/" << entries.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
