#include "crsym/io.hpp"

#include <fstream>
#include <sstream>

namespace crsym::io {

namespace {

Integer parse_integer(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw SchemaError(what + ": not a decimal integer: \"" + s + "\"");
    }
    return Integer(s);
  }
  throw SchemaError(what + ": expected an integer");
}

unsigned parse_small(const Json& j, const std::string& what) {
  const Integer v = parse_integer(j, what);
  if (v < 0 || v > 255) throw SchemaError(what + ": exponent out of range 0..255");
  return static_cast<unsigned>(v.get_ui());
}

Exponent parse_exponent(const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) {
    throw SchemaError(what + ": expected an array of " + std::to_string(n) + " integers");
  }
  Exponent e(n);
  for (std::size_t k = 0; k < n; ++k) e.set(k, parse_small(j[k], what));
  return e;
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError(where + ": missing key \"" + key + "\"");
  return obj.at(key);
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json exponent_to_json(const Exponent& e) {
  Json a = Json::array();
  for (std::size_t k = 0; k < e.size(); ++k) a.push_back(e[k]);
  return a;
}

std::size_t parse_n(const Json& j) {
  const Integer n = parse_integer(require(j, "n", "model"), "n");
  if (n < 1 || n > 8) throw SchemaError("n: must be between 1 and 8");
  return n.get_ui();
}

Json terms_to_json(const HoloPoly& p) {
  Json out = Json::array();
  for (const auto& [key, c] : p.terms()) {
    auto [z, w] = split_holo_key(p.nvars(), key);
    Json t;
    t["z"] = exponent_to_json(z);
    t["w"] = w;
    t["coeff"] = coeff_to_json(c);
    out.push_back(std::move(t));
  }
  return out;
}

HoloPoly parse_terms(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of terms");
  HoloPoly p(n);
  for (const auto& t : j) {
    const Exponent z = parse_exponent(require(t, "z", where), n, where + ".z");
    const unsigned w = t.contains("w") ? parse_small(t.at("w"), where + ".w") : 0;
    p.add_term(holo_key(z, w), parse_coeff(require(t, "coeff", where)));
  }
  return p;
}

}  // namespace

GaussRational parse_coeff(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw SchemaError("coeff: expected [re_num, re_den, im_num, im_den]");
  }
  const Integer rn = parse_integer(j[0], "coeff"), rd = parse_integer(j[1], "coeff");
  const Integer in = parse_integer(j[2], "coeff"), id = parse_integer(j[3], "coeff");
  if (rd == 0 || id == 0) throw SchemaError("coeff: zero denominator");
  return {Rational(rn, rd), Rational(in, id)};
}

Json coeff_to_json(const GaussRational& c) {
  return Json::array({integer_to_json(c.re().numerator()), integer_to_json(c.re().denominator()),
                      integer_to_json(c.im().numerator()), integer_to_json(c.im().denominator())});
}

ModelSpec parse_model_spec(const Json& j) {
  if (!j.is_object()) throw SchemaError("model: expected a JSON object");
  const std::size_t n = parse_n(j);
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  const bool has_pqr = j.contains("pqr");
  const bool has_terms = j.contains("terms");
  if (has_pqr == has_terms) throw SchemaError("model: exactly one of \"pqr\" and \"terms\" is required");
  if (has_pqr) {
    if (n != 3) throw SchemaError("pqr: requires n = 3");
    const Json& p = j.at("pqr");
    PQRSpec s;
    s.alpha = parse_exponent(require(p, "alpha", "pqr"), 3, "pqr.alpha");
    s.beta = parse_exponent(require(p, "beta", "pqr"), 3, "pqr.beta");
    s.gamma = parse_exponent(require(p, "gamma", "pqr"), 3, "pqr.gamma");
    if (p.contains("cP")) s.cP = parse_coeff(p.at("cP"));
    if (p.contains("cQ")) s.cQ = parse_coeff(p.at("cQ"));
    if (p.contains("cR")) s.cR = parse_coeff(p.at("cR"));
    return make_spec(s, name);
  }
  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw SchemaError("terms: expected an array");
  MixedPoly phi(n);
  for (const auto& t : terms) {
    const Exponent z = parse_exponent(require(t, "z", "terms"), n, "terms.z");
    const Exponent zb = parse_exponent(require(t, "zbar", "terms"), n, "terms.zbar");
    const unsigned u = t.contains("u") ? parse_small(t.at("u"), "terms.u") : 0;
    phi.add_term(mixed_key(z, zb, u), parse_coeff(require(t, "coeff", "terms")));
  }
  return make_spec(std::move(phi), name);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

ModelSpec load_model_spec(const std::string& path) { return parse_model_spec(read_json_file(path)); }

Json model_spec_to_json(const ModelSpec& spec) {
  Json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  j["n"] = spec.model.n();
  if (spec.pqr) {
    Json p;
    p["alpha"] = exponent_to_json(spec.pqr->alpha);
    p["beta"] = exponent_to_json(spec.pqr->beta);
    p["gamma"] = exponent_to_json(spec.pqr->gamma);
    p["cP"] = coeff_to_json(spec.pqr->cP);
    p["cQ"] = coeff_to_json(spec.pqr->cQ);
    p["cR"] = coeff_to_json(spec.pqr->cR);
    j["pqr"] = std::move(p);
    return j;
  }
  Json terms = Json::array();
  const std::size_t n = spec.model.n();
  for (const auto& [key, c] : spec.model.phi().terms()) {
    const MixedParts parts = split_mixed_key(n, key);
    Json t;
    t["z"] = exponent_to_json(parts.z);
    t["zbar"] = exponent_to_json(parts.zbar);
    if (parts.u != 0) t["u"] = parts.u;
    t["coeff"] = coeff_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

VectorField parse_field(const Json& j) {
  if (!j.is_object()) throw SchemaError("field: expected a JSON object");
  const std::size_t n = parse_n(j);
  const Json& f = require(j, "F", "field");
  if (!f.is_array() || f.size() != n) throw SchemaError("field.F: expected " + std::to_string(n) + " term lists");
  VectorField x(n);
  for (std::size_t k = 0; k < n; ++k) x.f(k) = parse_terms(f[k], n, "field.F");
  if (j.contains("G")) x.g() = parse_terms(j.at("G"), n, "field.G");
  return x;
}

VectorField load_field(const std::string& path) { return parse_field(read_json_file(path)); }

Json field_to_json(const VectorField& x) {
  Json j;
  j["n"] = x.nvars();
  Json f = Json::array();
  for (std::size_t k = 0; k < x.nvars(); ++k) f.push_back(terms_to_json(x.f(k)));
  j["F"] = std::move(f);
  j["G"] = terms_to_json(x.g());
  j["text"] = x.to_string();
  return j;
}

Json certificate_to_json(const NondegeneracyCertificate& c) {
  Json j;
  j["nondegenerate"] = c.nondegenerate;
  j["method"] = c.method;
  if (c.exponent_det) j["exponent_det"] = c.exponent_det->to_string();
  if (c.jacobian) j["jacobian"] = c.jacobian->to_string();
  if (c.witness) j["witness"] = field_to_json(*c.witness);
  return j;
}

namespace {

Json texts(const std::vector<VectorField>& fields) {
  Json a = Json::array();
  for (const auto& x : fields) a.push_back(x.to_string());
  return a;
}

Json structure_to_json(const Analysis& a) {
  const StructuralPrediction& p = a.prediction;
  const AlgebraReport& r = a.report;
  Json s;
  if (p.is_pqr && p.reason.empty()) {
    Json nf;
    nf["family"] = to_string(p.normal_form.family);
    nf["permutation"] = p.normal_form.permutation;
    nf["swapped"] = p.normal_form.swapped;
    nf["parameters"] = p.normal_form.parameters;
    nf["predicted_nilpotent_params"] = p.normal_form.predicted_nilpotent_params();
    s["normal_form"] = std::move(nf);
    Json gc;
    gc["dim"] = p.gc.dim;
    gc["reason"] = p.gc.reason;
    gc["generators"] = texts(p.gc.generators);
    s["gc_predicted"] = std::move(gc);
    Json gm;
    gm["dim"] = p.g_minus.dim;
    gm["generators"] = texts(p.g_minus.generators);
    s["g_minus_predicted"] = std::move(gm);
  } else {
    s["normal_form"] = nullptr;
    s["gc_predicted"] = nullptr;
    s["g_minus_predicted"] = nullptr;
  }
  if (!p.reason.empty()) s["predictors_skipped"] = p.reason;
  s["g1_generator"] = p.g1_field ? Json(p.g1_field->to_string()) : Json(nullptr);
  Json du;
  du["g_minus_1_over_d"] = r.g_minus_1_over_d();
  du["g_1_minus_1_over_d"] = r.g_1_minus_1_over_d();
  du["holds"] = (r.g_minus_1_over_d() > 0) == (r.g_1_minus_1_over_d() > 0);
  s["duality"] = std::move(du);
  Json rd;
  rd["fields_checked"] = p.rotations.fields_checked;
  rd["decompositions_ok"] = p.rotations.decompositions_ok;
  rd["splits_used"] = p.rotations.splits_used;
  rd["offdiagonal_dim"] = p.rotations.offdiagonal_dim;
  rd["failures"] = p.rotations.failures;
  s["rotation_decomposition"] = std::move(rd);
  Json fl;
  fl["has_real_diagonal"] = p.rotations.has_real_diagonal;
  fl["has_imaginary_diagonal"] = p.rotations.has_imaginary_diagonal;
  fl["real_diagonal_dim"] = p.rotations.real_diagonal_dim;
  fl["imaginary_diagonal_dim"] = p.rotations.imaginary_diagonal_dim;
  s["flags"] = std::move(fl);
  Json ds = Json::array();
  for (const auto& d : a.discrepancies) ds.push_back(Json{{"check", d.check}, {"message", d.message}});
  s["discrepancies"] = std::move(ds);
  return s;
}

Json component_to_json(const GradedComponent& c, std::size_t rigid_dim, bool with_rigid) {
  Json j;
  j["weight"] = c.weight.to_string();
  j["index"] = c.weight.index;
  j["dim"] = c.dim;
  if (with_rigid) j["rigid_dim"] = rigid_dim;
  j["ansatz_size"] = c.ansatz_size;
  Json b = Json::array();
  for (const auto& x : c.basis) b.push_back(field_to_json(x));
  j["basis"] = std::move(b);
  return j;
}

}  // namespace

Json report_to_json(const Analysis& a) {
  const AlgebraReport& r = a.report;
  Json j;
  Json m = model_spec_to_json(a.spec);
  m["d"] = r.d;
  m["phi"] = r.model.phi().to_string();
  j["model"] = std::move(m);
  j["nondegeneracy"] = certificate_to_json(r.certificate);
  Json comps = Json::array();
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    comps.push_back(component_to_json(r.components[i], r.rigid_dims[i], true));
  }
  j["components"] = std::move(comps);
  if (!r.diagnostics.empty()) {
    Json diag = Json::array();
    for (const auto& c : r.diagnostics) diag.push_back(component_to_json(c, 0, false));
    j["diagnostics"] = std::move(diag);
  }
  Json sum;
  sum["total"] = r.total();
  sum["g_minus_1"] = r.g_minus_1();
  sum["g_minus_1_over_d"] = r.g_minus_1_over_d();
  sum["g0"] = r.g0();
  sum["gc"] = r.gc();
  sum["g_1_minus_1_over_d"] = r.g_1_minus_1_over_d();
  sum["g1"] = r.g1();
  j["summary"] = std::move(sum);
  Json br;
  br["checked"] = r.brackets_checked;
  Json fails = Json::array();
  for (const auto& f : r.bracket_failures) {
    fails.push_back(Json{{"left", f.left.to_string()}, {"right", f.right.to_string()}, {"reason", f.reason}});
  }
  br["failures"] = std::move(fails);
  j["brackets"] = std::move(br);
  j["structure"] = structure_to_json(a);
  if (a.known) {
    Json k;
    k["family"] = a.known->family;
    k["statement"] = a.known->statement;
    k["stated_total"] = a.known->stated_total;
    k["computed_total"] = r.total();
    k["stated_gc"] = a.known->stated_gc;
    k["computed_gc"] = r.gc();
    k["bounds"] = Json::array({a.known->lower_bound, a.known->upper_bound});
    k["agrees"] = a.known->stated_total == r.total() && a.known->stated_gc == r.gc();
    j["known_result"] = std::move(k);
  }
  return j;
}

std::string report_to_text(const Analysis& a) {
  const AlgebraReport& r = a.report;
  std::ostringstream out;
  out << "model: Im w = " << r.model.phi().to_string() << "\n";
  out << "n = " << r.model.n() << ", d = " << r.d << "\n";
  out << "nondegenerate (" << r.certificate.method << ")\n";
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    out << "weight " << c.weight.to_string() << ": dim " << c.dim;
    if (r.rigid_dims[i] != 0) out << " (rigid " << r.rigid_dims[i] << ")";
    out << "\n";
    for (const auto& x : c.basis) out << "    " << x.to_string() << "\n";
  }
  for (const auto& c : r.diagnostics) out << "diagnostic weight " << c.weight.to_string() << ": dim " << c.dim << "\n";
  out << "total: " << r.total() << "\n";
  out << "gc: " << r.gc() << "\n";
  out << "g1: " << r.g1() << "\n";
  const auto& p = a.prediction;
  if (p.is_pqr && p.reason.empty()) {
    out << "normal form: " << to_string(p.normal_form.family) << "\n";
    out << "gc predicted: " << p.gc.dim << " (" << p.gc.reason << ")\n";
  }
  out << "real diagonal rotations: " << p.rotations.real_diagonal_dim << "\n";
  out << "imaginary diagonal rotations: " << p.rotations.imaginary_diagonal_dim << "\n";
  if (a.known) {
    out << "known result (" << a.known->family << "): stated total " << a.known->stated_total
        << ", computed " << r.total() << "\n";
  }
  if (a.discrepancies.empty()) {
    out << "discrepancies: none\n";
  } else {
    for (const auto& d : a.discrepancies) out << "discrepancy " << d.check << ": " << d.message << "\n";
  }
  return out.str();
}

}  // namespace crsym::io
