#include "crsym/serialize.hpp"

#include <fstream>
#include <sstream>

namespace crsym {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Scalar::from_string(j.get<std::string>())[0];
    } catch (const std::exception&) {
      throw ParseError(where + ": malformed rational '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(where + ": expected a rational string");
}

}  // namespace

Json to_json(const Scalar& s) {
  Json j = Json::array();
  for (const auto& part : s.serialize()) j.push_back(part);
  return j;
}

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    Json m = Json::object();
    for (const auto& [name, pow] : mono) m[name] = pow;
    terms.push_back(Json{{"m", m}, {"c", to_json(coeff)}});
  }
  return terms;
}

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(to_json(s));
  return j;
}

Json to_json(const SMat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const PMat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Poly& p = m(r, c);
      if (p.is_constant())
        row.push_back(to_json(p.to_scalar()));
      else
        row.push_back(Json{{"poly", to_json(p)}});
    }
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Signature& sig) { return Json{{"p", sig.p}, {"q", sig.q}, {"i_sign", sig.i_sign}}; }

Json to_json(const LieAlg& k) {
  Json sc = Json::array();
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t j = i + 1; j < k.dim(); ++j)
      for (std::size_t m = 0; m < k.dim(); ++m)
        if (sgn(k.c[i][j][m]) != 0) sc.push_back(Json::array({i, j, m, k.c[i][j][m].get_str()}));
  return Json{{"dim", k.dim()}, {"names", k.names}, {"structure_constants", sc}};
}

Json to_json(const AffineSpace& s) {
  Json j{{"ambient", s.ambient}, {"empty", s.empty}};
  if (!s.empty) {
    j["dimension"] = s.dimension();
    j["particular"] = to_json(s.particular);
    Json dirs = Json::array();
    for (const auto& d : s.directions) dirs.push_back(to_json(d));
    j["directions"] = dirs;
  }
  return j;
}

Json to_json(const Extension& ext) {
  Json alpha = Json::array();
  for (const auto& m : ext.alpha) alpha.push_back(to_json(m));
  Json cons = Json::array();
  for (const auto& c : ext.constraints) cons.push_back(to_json(c));
  return Json{{"d", ext.d},
              {"signature", to_json(ext.sig)},
              {"algebra", to_json(ext.k)},
              {"l_indices", ext.l_indices},
              {"alpha", alpha},
              {"unknowns", ext.unknowns},
              {"constraints", cons}};
}

Json to_json(const CrAlgebra& cr) {
  Json q = Json::array();
  for (const auto& v : cr.q_basis) {
    Vec re(v.size()), im(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      re[k] = v[k].re();
      im[k] = v[k].im();
    }
    q.push_back(Json::array({to_json(re), to_json(im)}));
  }
  return Json{{"d", cr.d}, {"algebra", to_json(cr.k)}, {"q_basis", q}};
}

Json to_json(const BasisChoice& ch) {
  auto list = [](const std::vector<Vec>& vs) {
    Json j = Json::array();
    for (const auto& v : vs) j.push_back(to_json(v));
    return j;
  };
  auto mats = [](const std::vector<SMat>& ms) {
    Json j = Json::array();
    for (const auto& m : ms) j.push_back(to_json(m));
    return j;
  };
  Json j{{"complement", to_json(ch.complement)}, {"representatives", list(ch.representatives)}, {"j_images", list(ch.j_images)}};
  if (!ch.l_alpha.empty()) j["l_alpha"] = mats(ch.l_alpha);
  if (!ch.flat_alpha.empty()) j["flat_alpha"] = mats(ch.flat_alpha);
  if (ch.flat_signature) j["flat_signature"] = to_json(*ch.flat_signature);
  return j;
}

Scalar scalar_from_json(const Json& j, int d, const std::string& where) {
  if (!j.is_array() || j.size() != 4) throw ParseError(where + ": a scalar is an array of 4 rational strings");
  std::array<std::string, 4> parts;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!j[k].is_string()) throw ParseError(at(where, k) + ": expected a rational string");
    parts[k] = j[k].get<std::string>();
  }
  try {
    return Scalar::parse(parts, d);
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Poly poly_from_json(const Json& j, int d, const std::string& where) {
  Poly p;
  array_at(j, where);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string w = at(where, t);
    const Json& mono = field(j[t], "m", w);
    if (!mono.is_object()) throw ParseError(w + ".m: expected an object of exponents");
    Poly term(scalar_from_json(field(j[t], "c", w), d, w + ".c"));
    for (auto it = mono.begin(); it != mono.end(); ++it) {
      const int pow = int_from_json(it.value(), w + ".m." + it.key());
      if (pow <= 0) throw ParseError(w + ".m." + it.key() + ": exponent must be positive");
      for (int e = 0; e < pow; ++e) term *= Poly::var(it.key());
    }
    p += term;
  }
  return p;
}

Vec vec_from_json(const Json& j, int d, const std::string& where) {
  array_at(j, where);
  Vec v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(scalar_from_json(j[k], d, at(where, k)));
  return v;
}

SMat smat_from_json(const Json& j, int d, const std::string& where) {
  array_at(j, where);
  if (j.empty()) throw ParseError(where + ": empty matrix");
  const std::size_t rows = j.size(), cols = array_at(j[0], at(where, 0)).size();
  SMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = array_at(j[r], at(where, r));
    if (row.size() != cols) throw ParseError(at(where, r) + ": ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(row[c], d, at(at(where, r), c));
  }
  return m;
}

PMat pmat_from_json(const Json& j, int d, const std::string& where) {
  array_at(j, where);
  if (j.empty()) throw ParseError(where + ": empty matrix");
  const std::size_t rows = j.size(), cols = array_at(j[0], at(where, 0)).size();
  PMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = array_at(j[r], at(where, r));
    if (row.size() != cols) throw ParseError(at(where, r) + ": ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string w = at(at(where, r), c);
      if (row[c].is_object())
        m(r, c) = poly_from_json(field(row[c], "poly", w), d, w + ".poly");
      else
        m(r, c) = Poly(scalar_from_json(row[c], d, w));
    }
  }
  return m;
}

Signature signature_from_json(const Json& j, const std::string& where) {
  Signature sig;
  sig.p = int_from_json(field(j, "p", where), where + ".p");
  sig.q = int_from_json(field(j, "q", where), where + ".q");
  sig.i_sign = j.contains("i_sign") ? int_from_json(j["i_sign"], where + ".i_sign") : 1;
  try {
    sig.validate();
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  return sig;
}

LieAlg liealg_from_json(const Json& j, const std::string& where) {
  const std::size_t dim = index_from_json(field(j, "dim", where), where + ".dim");
  const Json& names = array_at(field(j, "names", where), where + ".names");
  if (names.size() != dim) throw ParseError(where + ".names: expected " + std::to_string(dim) + " names");
  std::vector<std::string> nm;
  for (std::size_t k = 0; k < dim; ++k) {
    if (!names[k].is_string()) throw ParseError(at(where + ".names", k) + ": expected a string");
    nm.push_back(names[k].get<std::string>());
  }
  LieAlg g = LieAlg::abelian(nm);
  const std::string ws = where + ".structure_constants";
  const Json& sc = array_at(field(j, "structure_constants", where), ws);
  for (std::size_t t = 0; t < sc.size(); ++t) {
    const std::string w = at(ws, t);
    if (!sc[t].is_array() || sc[t].size() != 4) throw ParseError(w + ": expected [i, j, k, \"c\"]");
    const std::size_t a = index_from_json(sc[t][0], w), b = index_from_json(sc[t][1], w), c = index_from_json(sc[t][2], w);
    if (a >= dim || b >= dim || c >= dim || a == b) throw ParseError(w + ": index out of range");
    const Rational v = rational_from_json(sc[t][3], w);
    g.c[a][b][c] = v;
    g.c[b][a][c] = -v;
  }
  try {
    g.validate();
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  return g;
}

Extension extension_from_json(const Json& j) {
  Extension ext;
  ext.d = j.contains("d") ? int_from_json(j["d"], "d") : kDefaultD;
  try {
    validate_radicand(ext.d);
  } catch (const std::exception& e) {
    throw ParseError(std::string("d: ") + e.what());
  }
  ext.sig = signature_from_json(field(j, "signature", "extension"), "signature");
  ext.k = liealg_from_json(field(j, "algebra", "extension"), "algebra");
  const Json& li = array_at(field(j, "l_indices", "extension"), "l_indices");
  for (std::size_t k = 0; k < li.size(); ++k) ext.l_indices.push_back(index_from_json(li[k], at("l_indices", k)));
  const Json& al = array_at(field(j, "alpha", "extension"), "alpha");
  for (std::size_t k = 0; k < al.size(); ++k) ext.alpha.push_back(pmat_from_json(al[k], ext.d, at("alpha", k)));
  if (j.contains("unknowns")) {
    const Json& un = array_at(j["unknowns"], "unknowns");
    for (std::size_t k = 0; k < un.size(); ++k) {
      if (!un[k].is_string()) throw ParseError(at("unknowns", k) + ": expected a string");
      ext.unknowns.push_back(un[k].get<std::string>());
    }
  }
  if (j.contains("constraints")) {
    const Json& cs = array_at(j["constraints"], "constraints");
    for (std::size_t k = 0; k < cs.size(); ++k) ext.constraints.push_back(poly_from_json(cs[k], ext.d, at("constraints", k)));
  }
  return ext;
}

CrAlgebra cralgebra_from_json(const Json& j) {
  CrAlgebra cr;
  cr.d = j.contains("d") ? int_from_json(j["d"], "d") : kDefaultD;
  cr.k = liealg_from_json(field(j, "algebra", "cr_algebra"), "algebra");
  const Json& q = array_at(field(j, "q_basis", "cr_algebra"), "q_basis");
  const Scalar iu = Scalar::i();
  for (std::size_t k = 0; k < q.size(); ++k) {
    const std::string w = at("q_basis", k);
    if (!q[k].is_array() || q[k].size() != 2) throw ParseError(w + ": expected [real_coords, imag_coords]");
    Vec re = vec_from_json(q[k][0], cr.d, w + "[0]"), im = vec_from_json(q[k][1], cr.d, w + "[1]");
    if (re.size() != cr.k.dim() || im.size() != cr.k.dim()) throw ParseError(w + ": coordinate vectors must have length dim");
    Vec v(re.size());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = re[c] + iu * im[c];
    cr.q_basis.push_back(std::move(v));
  }
  try {
    cr.validate();
  } catch (const std::exception& e) {
    throw ParseError(std::string("cr_algebra: ") + e.what());
  }
  return cr;
}

BasisChoice choice_from_json(const Json& j, int d) {
  BasisChoice ch;
  ch.complement = vec_from_json(field(j, "complement", "choice"), d, "complement");
  auto list = [&](const char* key) {
    std::vector<Vec> out;
    if (!j.contains(key)) return out;
    const Json& a = array_at(j[key], key);
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(vec_from_json(a[k], d, at(key, k)));
    return out;
  };
  auto mats = [&](const char* key) {
    std::vector<SMat> out;
    if (!j.contains(key)) return out;
    const Json& a = array_at(j[key], key);
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(smat_from_json(a[k], d, at(key, k)));
    return out;
  };
  if (!j.contains("representatives")) throw ParseError("choice: missing field 'representatives'");
  ch.representatives = list("representatives");
  ch.j_images = list("j_images");
  ch.l_alpha = mats("l_alpha");
  ch.flat_alpha = mats("flat_alpha");
  if (j.contains("flat_signature")) ch.flat_signature = signature_from_json(j["flat_signature"], "flat_signature");
  return ch;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace crsym
