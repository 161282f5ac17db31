#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "crsym/builtins.hpp"
#include "crsym/serialize.hpp"
#include "crsym/verify.hpp"

using namespace crsym;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  bool machine() const { return format == "machine"; }
};

// Text report: "name: value" lines; machine report: one JSON object.
class Report {
 public:
  explicit Report(std::string command) { json_["command"] = std::move(command); }

  void verdict(const std::string& name, bool pass, const std::string& detail = "") {
    Json v{{"pass", pass}};
    if (!detail.empty()) v["detail"] = detail;
    json_["verdicts"][name] = v;
    text_ << (pass ? "  [pass] " : "  [FAIL] ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
    all_pass_ = all_pass_ && pass;
  }
  void info(const std::string& name, const Json& value, const std::string& text) {
    json_[name] = value;
    text_ << "  " << name << ": " << text << "\n";
  }
  void line(const std::string& s) { text_ << s << "\n"; }
  Json& json() { return json_; }
  bool all_pass() const { return all_pass_; }

  void print(const Options& opts) const {
    if (opts.machine())
      std::cout << canonical_dump(json_);
    else
      std::cout << json_["command"].get<std::string>() << "\n" << text_.str();
  }

 private:
  Json json_;
  std::ostringstream text_;
  bool all_pass_ = true;
};

Scalar scalar_arg(const Json& j, int d, const std::string& where) {
  if (j.is_array()) return scalar_from_json(j, d, where);
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) {
    try {
      return Scalar::from_string(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(where + ": malformed rational");
    }
  }
  throw ParseError(where + ": expected a scalar");
}

Vec vec_arg(const std::string& text, int d, const std::string& where) {
  Json j = parse_json(text);
  if (!j.is_array()) throw ParseError(where + ": expected a JSON array of scalars");
  Vec v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(scalar_arg(j[k], d, where + "[" + std::to_string(k) + "]"));
  return v;
}

std::string affine_text(const AffineSpace& s, std::size_t n) {
  if (s.empty) return "EMPTY";
  const auto names = parameter_names(n);
  std::ostringstream os;
  os << "dimension " << s.dimension();
  if (s.dimension() == 0) {
    os << ", point (";
    for (std::size_t k = 0; k < s.particular.size(); ++k) os << (k ? ", " : "") << names[k] << "=" << s.particular[k];
    return os.str() + ")";
  }
  os << ", equations {";
  bool first = true;
  for (const auto& f : s.equations()) {
    std::string lhs;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
      if (f.coeffs[k].is_zero()) continue;
      const std::string c = f.coeffs[k] == Scalar(1) ? "" : "(" + f.coeffs[k].str() + ")*";
      lhs += (lhs.empty() ? "" : " + ") + c + names[k];
    }
    os << (first ? "" : ", ") << lhs << " = " << (-f.constant).str();
    first = false;
  }
  os << "}";
  return os.str();
}

std::string involutivity(const AffineSpace& s, std::size_t n) {
  if (s.empty) return "no symmetries";
  const std::size_t zi = 2 * n;
  const bool z_fixed = std::all_of(s.directions.begin(), s.directions.end(), [&](const Vec& d) { return d[zi].is_zero(); });
  if (!z_fixed) return "z free: involutive exactly on z = 0";
  return s.particular[zi].is_zero() ? "z = 0: all involutive" : "z fixed nonzero: none involutive";
}

int cmd_find_symmetries(const Options& opts, int p, int q, int i_sign, int d, const std::string& u, const std::string& v,
                        const std::string& mode) {
  Signature sig{p, q, i_sign};
  try {
    sig.validate();
    validate_radicand(d);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  NullLinePair pair{vec_arg(u, d, "--u"), vec_arg(v, d, "--v")};
  OrbitCase oc;
  try {
    oc = classify_pair(pair, sig);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Report rep("find-symmetries " + sig.str());
  rep.info("orbit_case", to_string(oc), to_string(oc));
  std::vector<SymmetryMode> modes;
  if (mode == "preserve" || mode == "any") modes.push_back(SymmetryMode::Preserve);
  if (mode == "swap" || mode == "any") modes.push_back(SymmetryMode::Swap);
  Json sets = Json::object();
  for (auto m : modes) {
    AffineSpace s = find_symmetries(pair, m, sig);
    Json js = to_json(s);
    js["parameters"] = parameter_names(sig.n());
    js["involutivity"] = involutivity(s, sig.n());
    sets[to_string(m)] = js;
    rep.line("  " + to_string(m) + ": " + affine_text(s, sig.n()));
    rep.line("    " + involutivity(s, sig.n()));
    auto bad = unsound_point(s, pair, m, sig);
    rep.verdict(to_string(m) + " back-substitution", !bad, bad ? "fails at " + to_json(*bad).dump() : "");
  }
  rep.json()["solutions"] = sets;
  rep.print(opts);
  return rep.all_pass() ? kPass : kFail;
}

void extension_checks(Report& rep, const Extension& ext, const std::vector<std::string>& require) {
  StructureReport st = check_structure(ext);
  auto issue = [&](const std::string& key) {
    for (const auto& i : st.issues)
      if (i.find(key) != std::string::npos) return i;
    return std::string();
  };
  rep.verdict("shapes", st.shapes, st.shapes ? "" : st.issues.front());
  if (!st.shapes) return;
  rep.verdict("membership", st.members, issue("not in su"));
  rep.verdict("subalgebra", st.subalgebra, issue("l is not closed"));
  rep.verdict("isomorphism", st.isomorphism, issue("alpha-bar"));
  rep.verdict("equivariance", st.equivariant, issue("equivariance"));
  if (!st.isomorphism) return;

  bool in_p = true;
  std::string escape;
  for (const auto& e : curvature_table(ext))
    if (!e.in_p && in_p) {
      in_p = false;
      escape = "tau(" + ext.k.names[e.i] + ", " + ext.k.names[e.j] + ") = " + to_string(e.value);
    }
  rep.verdict("curvature in p", in_p, escape);

  const auto dk = kostant_codifferential(ext);
  std::string witness;
  const auto comp = ext.complement();
  for (std::size_t j = 0; j < dk.size() && witness.empty(); ++j)
    if (!dk[j].is_zero()) witness = "d*kappa(" + ext.k.names[comp[j]] + ") = " + to_string(dk[j]);
  rep.verdict("normal", witness.empty(), witness);

  const bool flat = is_flat(ext);
  const bool weyl = in_p && weyl_is_zero(ext);
  const bool metr = metrizability_check(ext);
  auto has = [&](const char* k) { return std::find(require.begin(), require.end(), k) != require.end(); };
  if (has("flat"))
    rep.verdict("flat", flat);
  else
    rep.info("flat", flat, flat ? "true" : "false");
  if (has("weyl-zero"))
    rep.verdict("Weyl component zero", weyl);
  else
    rep.info("weyl_zero", weyl, weyl ? "true" : "false");
  if (has("metrizable"))
    rep.verdict("metrizable", metr);
  else
    rep.info("metrizable", metr, metr ? "true" : "false");

  WeylDescriptor wd = invariant_weyl_descriptor(ext);
  rep.info("gamma_l_consistent", wd.l_consistent, wd.l_consistent ? "true" : "false");

  NijenhuisReport nj = nijenhuis_check(ext);
  rep.verdict("Nijenhuis (C^n, C^n)", nj.cn_cn);
  rep.verdict("Nijenhuis (C^n, R)", nj.cn_r);
  rep.verdict("Nijenhuis (C^n, E_gr)", nj.cn_gr);
  rep.verdict("Nijenhuis (R, E_gr)", nj.r_gr);
  rep.verdict("Nijenhuis remaining pairs", nj.rest);
  rep.json()["not_checked"] = Json::array({"group-level equivariance (algebra level only)"});
}

int cmd_check_extension(const Options& opts, const std::string& file, const std::vector<std::string>& require) {
  for (const auto& r : require)
    if (r != "flat" && r != "weyl-zero" && r != "metrizable") throw UsageError("unknown --require value '" + r + "'");
  Extension ext = extension_from_json(load_json_file(file));
  Report rep("check-extension " + file);
  if (ext.has_unknowns() || !ext.unknowns.empty()) {
    NormalizationResult res;
    try {
      res = solve_normalization(ext);
    } catch (const NormalizationError& e) {
      rep.verdict("normalization", false, e.what());
      rep.print(opts);
      return kFail;
    }
    Json sol = Json::object();
    std::string text;
    for (const auto& [name, value] : res.solution) {
      sol[name] = to_json(value);
      text += (text.empty() ? "" : ", ") + name + " = " + value.str();
    }
    rep.info("solution", sol, text);
    ext = res.ext;
    rep.json()["extension"] = to_json(ext);
  }
  extension_checks(rep, ext, require);
  rep.print(opts);
  return rep.all_pass() ? kPass : kFail;
}

void emit(const Json& j, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << canonical_dump(j);
}

void cr_report(Report& rep, const CrReport& cr) {
  rep.info("levi_signature", Json::array({cr.levi.levi_signature.first, cr.levi.levi_signature.second}),
           "(" + std::to_string(cr.levi.levi_signature.first) + ", " + std::to_string(cr.levi.levi_signature.second) + ")");
  rep.info("dim_l", cr.levi.l_basis.size(), std::to_string(cr.levi.l_basis.size()));
  rep.info("injectivity", to_string(cr.injectivity.verdict),
           to_string(cr.injectivity.verdict) + " (kernel dimension " + std::to_string(cr.injectivity.kernel_dimension) + ")");
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  rep.info("nu_tau_route", cr.nu.tau_route, yes_no(cr.nu.tau_route));
  rep.info("nu_bracket_route", cr.nu.bracket_route,
           yes_no(cr.nu.bracket_route) + (cr.nu.violations.empty() ? "" : " (" + cr.nu.violations.front() + ")"));
  rep.info("verdict", to_string(cr.verdict), to_string(cr.verdict));
  rep.json()["notes"] = cr.notes;
  for (const auto& n : cr.notes) rep.line("  note: " + n);
  rep.json()["not_checked"] = cr.not_checked;
  for (const auto& n : cr.not_checked) rep.line("  not checked: " + n);
}

int cmd_check_cralgebra(const Options& opts, const std::string& file, const std::string& choice_file, bool search, bool free_q,
                        std::size_t max_samples, const std::string& emit_path) {
  if (search == !choice_file.empty()) throw UsageError("give exactly one of --choice or --search");
  CrAlgebra cr = cralgebra_from_json(load_json_file(file));
  Report rep("check-cralgebra " + file);
  if (!search) {
    BasisChoice ch = choice_from_json(load_json_file(choice_file), cr.d);
    CrReport res = check_symmetric(cr, ch);
    cr_report(rep, res);
    if (res.extension) {
      rep.json()["extension"] = to_json(*res.extension);
      if (!opts.machine()) rep.line(canonical_dump(to_json(*res.extension)));
      emit(to_json(*res.extension), emit_path);
    }
    rep.print(opts);
    return res.verdict == Verdict::NotSymmetricForChoice ? kFail : kPass;
  }
  if (cr.k.dim() > 4) throw UsageError("--search supports only dim k <= 4");
  SearchOptions so;
  so.free_q = free_q;
  so.max_samples = max_samples;
  SearchResult res = search_symmetric(cr, so);
  Json gauges = Json::array();
  for (const auto& g : res.gauges) {
    Json jg{{"i_sign", g.i_sign}, {"consistent", g.consistent}};
    Json elim = Json::object();
    for (const auto& [k, v] : g.eliminated) elim[k] = v.str();
    Json resid = Json::array();
    for (const auto& e : g.residual) resid.push_back(e.str());
    jg["eliminated"] = elim;
    jg["residual"] = resid;
    jg["free_unknowns"] = g.free_unknowns;
    gauges.push_back(jg);
    rep.line("  gauge I = " + std::to_string(g.i_sign) + (g.consistent ? "" : " (inconsistent)"));
    for (const auto& [k, v] : g.eliminated) rep.line("    " + k + " = " + v.str());
    for (const auto& e : g.residual) rep.line("    " + e.str() + " = 0");
    std::string fr;
    for (const auto& f : g.free_unknowns) fr += " " + f;
    rep.line("    free:" + fr);
  }
  rep.json()["gauges"] = gauges;
  Json samples = Json::array();
  std::size_t symmetric = 0;
  for (const auto& s : res.samples) {
    samples.push_back(Json{{"frame", to_json(s.B)}, {"verdict", to_string(s.verdict)}});
    if (s.verdict == Verdict::Symmetric) ++symmetric;
  }
  rep.json()["samples"] = samples;
  rep.line("  samples: " + std::to_string(res.samples.size()) + ", symmetric: " + std::to_string(symmetric));
  rep.info("globally_not_symmetric", res.globally_not_symmetric, res.globally_not_symmetric ? "true" : "false");
  rep.print(opts);
  return res.globally_not_symmetric ? kFail : kPass;
}

std::vector<std::pair<std::string, Json>> builtin_files(const std::string& name) {
  namespace b = builtins;
  if (name == "e2")
    return {{"e2_extension.json", to_json(b::e2_extension())},
            {"e2_skeleton.json", to_json(b::e2_skeleton())},
            {"e2_cralgebra.json", to_json(b::e2_cr_algebra())},
            {"e2_choice.json", to_json(b::e2_choice())},
            {"e2_parity_mixing_choice.json", to_json(b::e2_parity_mixing_choice())}};
  if (name == "sp11" || name == "sp4r") {
    auto gens = name == "sp11" ? b::sp11_generators() : b::sp4r_generators();
    return {{name + "_extension.json", to_json(b::sp_extension(gens))},
            {name + "_cralgebra.json", to_json(b::sp_cr_algebra(gens))},
            {name + "_choice.json", to_json(b::sp_choice(gens))}};
  }
  if (name == "standard") {
    const Signature sig = b::standard_signature();
    return {{"standard_extension.json", to_json(b::standard_extension(sig))},
            {"standard_cralgebra.json", to_json(b::standard_cr_algebra(sig))},
            {"standard_choice.json", to_json(b::standard_choice(sig))}};
  }
  if (name == "exam61" || name == "exam62") {
    auto cases = name == "exam61" ? b::exam61_cases() : std::vector<b::SymmetryCase>{b::exam62_case()};
    Json arr = Json::array();
    for (const auto& c : cases)
      arr.push_back(Json{{"name", c.name}, {"signature", to_json(b::exam_signature())}, {"u", to_json(c.pair.u)}, {"v", to_json(c.pair.v)}});
    return {{name + "_pairs.json", arr}};
  }
  throw UsageError("unknown builtin '" + name + "'");
}

int cmd_builtin(const Options& opts, const std::string& name, bool verify, const std::string& out_dir) {
  auto files = builtin_files(name);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& [fname, j] : files) emit(j, (std::filesystem::path(out_dir) / fname).string());
  }
  if (!verify) {
    if (out_dir.empty()) {
      Json all = Json::object();
      for (const auto& [fname, j] : files) all[fname] = j;
      std::cout << canonical_dump(all);
    }
    return kPass;
  }
  VerifyReport vr = verify_builtin(name, opts.seed);
  Report rep("builtin " + name + " --verify");
  for (const auto& c : vr.checks) rep.verdict(c.name, c.pass, c.detail);
  rep.print(opts);
  return vr.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for symmetric CR geometries"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", opts.seed, "Seed for randomized suites");

  int p = 2, q = 2, i_sign = 1, d = kDefaultD;
  std::string u, v, mode = "any";
  auto* fs = app.add_subcommand("find-symmetries", "Symmetries at <e0> preserving or swapping two null lines");
  fs->add_option("--p", p, "Levi signature p")->required();
  fs->add_option("--q", q, "Levi signature q")->required();
  fs->add_option("--i-sign", i_sign, "Sign of I");
  fs->add_option("--d", d, "Radicand of the field");
  fs->add_option("--u", u, "First vector, JSON array of scalars")->required();
  fs->add_option("--v", v, "Second vector, JSON array of scalars")->required();
  fs->add_option("--mode", mode, "preserve, swap or any")->check(CLI::IsMember({"preserve", "swap", "any"}));

  std::string ext_file;
  std::vector<std::string> require;
  auto* ce = app.add_subcommand("check-extension", "Check an extension file");
  ce->add_option("file", ext_file, "Extension file")->required();
  ce->add_option("--require", require, "Also require: flat, weyl-zero, metrizable")->delimiter(',');

  std::string cr_file, choice_file, emit_path;
  bool search = false, free_q = false;
  std::size_t max_samples = SearchOptions{}.max_samples;
  auto* cc = app.add_subcommand("check-cralgebra", "Decide symmetry of a CR algebra");
  cc->add_option("file", cr_file, "CR algebra file")->required();
  cc->add_option("--choice", choice_file, "Basis choice file");
  cc->add_flag("--search", search, "Search frames by elimination (dim k <= 4)");
  cc->add_flag("--free-q", free_q, "Search without fixing q");
  cc->add_option("--max-samples", max_samples, "Grid samples per gauge");
  cc->add_option("--emit", emit_path, "Write the normal extension here");

  std::string name, out_dir;
  bool verify = false;
  auto* bi = app.add_subcommand("builtin", "Emit or verify built-in data");
  bi->add_option("name", name, "e2, sp11, sp4r, standard, exam61 or exam62")->required();
  bi->add_flag("--verify", verify, "Run the regression suite");
  bi->add_option("--out", out_dir, "Directory for the data files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*fs) return cmd_find_symmetries(opts, p, q, i_sign, d, u, v, mode);
    if (*ce) return cmd_check_extension(opts, ext_file, require);
    if (*cc) return cmd_check_cralgebra(opts, cr_file, choice_file, search, free_q, max_samples, emit_path);
    if (*bi) return cmd_builtin(opts, name, verify, out_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
