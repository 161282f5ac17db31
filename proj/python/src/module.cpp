#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crsym/builtins.hpp"
#include "crsym/serialize.hpp"
#include "crsym/verify.hpp"

namespace py = pybind11;
using namespace crsym;

namespace {

Vec parse_vec(const std::string& text, int d) { return vec_from_json(parse_json(text), d, "vector"); }

std::string find_symmetries_json(int p, int q, const std::string& u, const std::string& v, const std::string& mode,
                                 int i_sign, int d) {
  const Signature sig{p, q, i_sign};
  sig.validate();
  const NullLinePair pair{parse_vec(u, d), parse_vec(v, d)};
  SymmetryMode m;
  if (mode == "preserve")
    m = SymmetryMode::Preserve;
  else if (mode == "swap")
    m = SymmetryMode::Swap;
  else
    throw std::invalid_argument("mode must be 'preserve' or 'swap'");
  Json out = to_json(find_symmetries(pair, m, sig));
  out["orbit_case"] = to_string(classify_pair(pair, sig));
  out["parameters"] = parameter_names(sig.n());
  return out.dump();
}

py::dict check_extension(const std::string& text) {
  Extension ext = extension_from_json(parse_json(text));
  if (!ext.unknowns.empty()) ext = solve_normalization(ext).ext;
  const StructureReport st = check_structure(ext);
  py::dict out;
  out["structure"] = st.ok();
  out["issues"] = st.issues;
  if (!st.ok()) return out;
  out["flat"] = is_flat(ext);
  out["normal"] = is_normal(ext);
  out["weyl_zero"] = weyl_is_zero(ext);
  out["metrizable"] = metrizability_check(ext);
  out["nijenhuis"] = nijenhuis_check(ext).ok();
  out["extension"] = canonical_dump(to_json(ext));
  return out;
}

py::dict check_cralgebra(const std::string& cr_text, const std::string& choice_text) {
  const CrAlgebra cr = cralgebra_from_json(parse_json(cr_text));
  const BasisChoice ch = choice_from_json(parse_json(choice_text), cr.d);
  const CrReport rep = check_symmetric(cr, ch);
  py::dict out;
  out["verdict"] = to_string(rep.verdict);
  out["levi_signature"] = rep.levi.levi_signature;
  out["kernel_dimension"] = rep.injectivity.kernel_dimension;
  out["notes"] = rep.notes;
  out["extension"] = rep.extension ? py::object(py::str(canonical_dump(to_json(*rep.extension)))) : py::object(py::none());
  return out;
}

std::string builtin_json(const std::string& name) {
  namespace b = builtins;
  Json out = Json::object();
  if (name == "e2") {
    out["extension"] = to_json(b::e2_extension());
    out["skeleton"] = to_json(b::e2_skeleton());
    out["cralgebra"] = to_json(b::e2_cr_algebra());
    out["choice"] = to_json(b::e2_choice());
    out["parity_mixing_choice"] = to_json(b::e2_parity_mixing_choice());
  } else if (name == "sp11" || name == "sp4r") {
    const auto gens = name == "sp11" ? b::sp11_generators() : b::sp4r_generators();
    out["extension"] = to_json(b::sp_extension(gens));
    out["cralgebra"] = to_json(b::sp_cr_algebra(gens));
    out["choice"] = to_json(b::sp_choice(gens));
  } else if (name == "standard") {
    const Signature sig = b::standard_signature();
    out["extension"] = to_json(b::standard_extension(sig));
    out["cralgebra"] = to_json(b::standard_cr_algebra(sig));
    out["choice"] = to_json(b::standard_choice(sig));
  } else {
    throw std::invalid_argument("no data files for builtin '" + name + "'");
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_crsym, m) {
  m.doc() = "Exact computations for symmetric CR geometries";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("builtin_names", &builtins::names);
  m.def("builtin_json", &builtin_json, py::arg("name"));
  m.def(
      "verify_builtin",
      [](const std::string& name, std::uint64_t seed) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : verify_builtin(name, seed).checks) out.emplace_back(c.name, c.pass, c.detail);
        return out;
      },
      py::arg("name"), py::arg("seed") = kDefaultSeed);
  m.def("find_symmetries_json", &find_symmetries_json, py::arg("p"), py::arg("q"), py::arg("u"), py::arg("v"),
        py::arg("mode"), py::arg("i_sign") = 1, py::arg("d") = kDefaultD);
  m.def("check_extension", &check_extension, py::arg("text"));
  m.def("check_cralgebra", &check_cralgebra, py::arg("cralgebra"), py::arg("choice"));
  m.def("default_seed", [] { return kDefaultSeed; });
}
