// superalg: batch front-end over the library. Reads an algebra spec (or an
// array of them), runs one pipeline, writes a v1 JSON document per spec.
//
// Exit codes: 0 ok, 2 parse, 3 validation, 4 unsupported, 5 verify failure.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superalg/constructors.hpp"
#include "superalg/error.hpp"
#include "superalg/firstkind.hpp"
#include "superalg/secondkind.hpp"

using json = nlohmann::ordered_json;
using namespace superalg;

namespace {

constexpr const char* kTool = "superalg 1.0.0";
constexpr const char* kSchema = "v1";

struct SpecError {
  int exit_code;
  std::string code;
  std::string location;
  std::string message;
};

[[noreturn]] void parse_fail(const std::string& where, const std::string& msg) {
  throw SpecError{2, "ParseError", where.empty() ? "/" : where, msg};
}

// ---- spec parsing ----------------------------------------------------------

Field parse_field(const json& j, const std::string& where) {
  try {
    if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
    if (j.is_object() && j.size() == 1) {
      if (j.contains("Q")) return Field::rationals();
      if (j.contains("Qsqrt") && j["Qsqrt"].is_number_integer()) return Field::quadratic(j["Qsqrt"].get<std::int64_t>());
      if (j.contains("GF") && j["GF"].is_number_integer()) return Field::prime(j["GF"].get<std::int64_t>());
    }
  } catch (const Error& e) {
    throw SpecError{3, std::string(to_string(e.code())), where, e.what()};
  }
  parse_fail(where, "expected \"Q\", {\"Qsqrt\": d} or {\"GF\": p}");
}

Scalar parse_scalar(const Field& f, const json& j, const std::string& where) {
  std::string text;
  if (j.is_number_integer()) {
    text = std::to_string(j.get<std::int64_t>());
  } else if (j.is_string()) {
    text = j.get<std::string>();
  } else {
    parse_fail(where, "expected a scalar (integer or string)");
  }
  try {
    return Scalar::parse(f, text);
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
}

int parse_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  return j.get<int>();
}

const json& field_of(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) parse_fail(where, std::string("missing key \"") + key + "\"");
  return obj[key];
}

std::vector<Scalar> parse_scalar_list(const Field& f, const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_scalar(f, j[i], where + "/" + std::to_string(i)));
  return out;
}

SuperAlgebra parse_raw(const Field& f, const json& j, const std::string& where) {
  int dim = parse_int(field_of(j, "dim", where), where + "/dim");
  if (dim <= 0) parse_fail(where + "/dim", "dim must be positive");
  const json& pj = field_of(j, "parity", where);
  if (!pj.is_array() || static_cast<int>(pj.size()) != dim) parse_fail(where + "/parity", "expected dim parities");
  std::vector<int> parity;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    int p = parse_int(pj[i], where + "/parity/" + std::to_string(i));
    if (p != 0 && p != 1) parse_fail(where + "/parity/" + std::to_string(i), "parity must be 0 or 1");
    parity.push_back(p);
  }
  // constants: [[i, j, k, c], ...] meaning e_i e_j has coefficient c on e_k
  const json& cj = field_of(j, "constants", where);
  if (!cj.is_array()) parse_fail(where + "/constants", "expected an array of [i, j, k, c]");
  std::vector<std::vector<Term>> table(static_cast<std::size_t>(dim * dim));
  for (std::size_t r = 0; r < cj.size(); ++r) {
    std::string w = where + "/constants/" + std::to_string(r);
    if (!cj[r].is_array() || cj[r].size() != 4) parse_fail(w, "expected [i, j, k, c]");
    int idx[3];
    for (int t = 0; t < 3; ++t) {
      idx[t] = parse_int(cj[r][t], w + "/" + std::to_string(t));
      if (idx[t] < 0 || idx[t] >= dim) parse_fail(w + "/" + std::to_string(t), "index out of range");
    }
    Scalar c = parse_scalar(f, cj[r][3], w + "/3");
    auto& cell = table[static_cast<std::size_t>(idx[0] * dim + idx[1])];
    auto it = std::find_if(cell.begin(), cell.end(), [&](const Term& t) { return t.index == std::size_t(idx[2]); });
    if (it != cell.end()) parse_fail(w, "duplicate constant");
    if (!c.is_zero()) cell.push_back(Term{std::size_t(idx[2]), c});
  }
  for (auto& cell : table)
    std::sort(cell.begin(), cell.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
  Vec unit = parse_scalar_list(f, field_of(j, "unit", where), where + "/unit");
  if (static_cast<int>(unit.size()) != dim) parse_fail(where + "/unit", "expected dim coordinates");
  return SuperAlgebra(f, parity, table, unit);
}

SuperAlgebra parse_recipe(const Field& f, const json& j, const std::string& where) {
  if (!j.is_object() || j.size() != 1) parse_fail(where, "recipe must be an object with exactly one key");
  const std::string key = j.begin().key();
  const json& v = j.begin().value();
  const std::string w = where + "/" + key;
  if (key == "base") return base_algebra(f);
  if (key == "quadratic") return quadratic_graded(parse_scalar(f, v, w));
  if (key == "gquat" || key == "quaternion") {
    auto ab = parse_scalar_list(f, v, w);
    if (ab.size() != 2) parse_fail(w, "expected [a, b]");
    return key == "gquat" ? graded_quaternion(ab[0], ab[1]) : ungraded_quaternion(ab[0], ab[1]);
  }
  if (key == "matrix") {
    int n = parse_int(field_of(v, "n", w), w + "/n");
    int m = parse_int(field_of(v, "m", w), w + "/m");
    if (v.contains("over")) return matrix_superalgebra(n, m, parse_recipe(f, v["over"], w + "/over"));
    return matrix_superalgebra(n, m, f);
  }
  if (key == "tensor") {
    if (!v.is_array() || v.empty()) parse_fail(w, "expected a nonempty array of recipes");
    SuperAlgebra acc = parse_recipe(f, v[0], w + "/0");
    for (std::size_t i = 1; i < v.size(); ++i) acc = graded_tensor(acc, parse_recipe(f, v[i], w + "/" + std::to_string(i)));
    return acc;
  }
  if (key == "clifford") return clifford(f, parse_scalar_list(f, v, w));
  if (key == "sop") return superopposite(parse_recipe(f, v, w));
  if (key == "conj") return conjugate_superalgebra(parse_recipe(f, v, w));
  if (key == "trivially_graded") return trivially_graded(parse_recipe(f, v, w));
  if (key == "raw") return parse_raw(f, v, w);
  parse_fail(where, "unknown recipe key \"" + key + "\"");
}

// The field the algebra is built over. Second-kind commands accept "Q" with
// an extension {t}, meaning the algebra lives over Q(sqrt t).
Field spec_field(const std::string& command, const json& spec) {
  Field f = parse_field(field_of(spec, "field", ""), "/field");
  bool second = command == "second-kind" || command == "cor" || command == "nu-square";
  if (!spec.contains("extension")) {
    if (second && !f.is_quadratic())
      throw SpecError{3, "NotOverQuadraticExtension", "/extension", command + " needs a quadratic extension"};
    return f;
  }
  const json& ext = spec["extension"];
  if (!ext.is_object() || !ext.contains("t") || !ext["t"].is_number_integer())
    parse_fail("/extension", "expected {\"t\": d}");
  std::int64_t t = ext["t"].get<std::int64_t>();
  if (f.is_quadratic()) {
    if (f.d() != t) throw SpecError{3, "FieldMismatch", "/extension/t", "extension does not match the field"};
    return f;
  }
  if (!f.is_rationals()) throw SpecError{3, "UnsupportedField", "/extension", "extensions are over Q only"};
  try {
    return Field::quadratic(t);
  } catch (const Error& e) {
    throw SpecError{3, std::string(to_string(e.code())), "/extension/t", e.what()};
  }
}

SuperAlgebra build_algebra(const std::string& command, const json& spec) {
  if (!spec.is_object()) parse_fail("", "spec must be an object");
  Field f = spec_field(command, spec);
  const json& alg = field_of(spec, "algebra", "");
  if (command == "clifford") {
    if (alg.is_object() && alg.contains("clifford")) return clifford(f, parse_scalar_list(f, alg["clifford"], "/algebra/clifford"));
    parse_fail("/algebra", "clifford command expects {\"clifford\": [q...]}");
  }
  return parse_recipe(f, alg, "/algebra");
}

// ---- rendering -------------------------------------------------------------

json render_vec(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json render_matrix(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(row);
  }
  return out;
}

std::string property_name(WitnessProperty p) { return to_string(p); }

json header(const std::string& command, const json& spec) {
  json doc;
  doc["schema"] = kSchema;
  doc["tool"] = kTool;
  doc["command"] = command;
  doc["input"] = spec;
  return doc;
}

json render_certificate(const std::string& command, const json& spec, const Certificate& c) {
  json doc = header(command, spec);
  doc["verdict"] = to_string(c.verdict);
  doc["reason_tag"] = c.reason_tag;
  if (c.witness) {
    doc["witness"] = {{"matrix", render_matrix(c.witness->matrix)},
                      {"parity", c.witness->parity},
                      {"semilinear", c.witness->semilinear},
                      {"property", property_name(c.property)}};
  } else {
    doc["witness"] = nullptr;
  }
  doc["invariant_data"] = c.invariant_data ? json(c.invariant_data->to_string()) : json(nullptr);
  doc["verification_trace"] = c.trace;
  return doc;
}

int verdict_exit(const Certificate& c) { return c.verdict == Verdict::Unsupported ? 4 : 0; }

struct Outcome {
  json doc;
  int exit_code = 0;
};

// ---- commands --------------------------------------------------------------

Outcome with_verified(const std::string& command, const json& spec, const SuperAlgebra& a, Certificate c) {
  if (c.witness) {
    AxiomReport r = verify_witness(a, c);
    c.trace.push_back(std::string("witness re-verified: ") + (r.ok ? "ok" : "FAILED " + r.detail));
  }
  return {render_certificate(command, spec, c), verdict_exit(c)};
}

Outcome cmd_classify(const json& spec) {
  SuperAlgebra a = build_algebra("classify", spec);
  ClassificationReport rep = classify_css(a);
  json doc = header("classify", spec);
  json cls;
  cls["dim"] = a.dim();
  cls["type"] = to_string(rep.type);
  cls["is_central"] = rep.is_central;
  cls["is_graded_simple"] = rep.is_graded_simple;
  cls["a"] = rep.a ? json(rep.a->to_string()) : json(nullptr);
  cls["z"] = rep.z ? render_vec(rep.z->coords()) : json(nullptr);
  cls["split"] = rep.split;
  cls["division"] = is_division_superalgebra(a);
  cls["a0_summary"] = rep.a0_summary;
  doc["verdict"] = "Classified";
  doc["classification"] = cls;
  return {doc, 0};
}

Outcome cmd_first_kind(const json& spec) {
  SuperAlgebra a = build_algebra("first-kind", spec);
  return with_verified("first-kind", spec, a, decide_superinvolution_first_kind(a));
}

Outcome cmd_graded_albert(const json& spec) {
  SuperAlgebra a = build_algebra("graded-albert", spec);
  Certificate anti = decide_superantiautomorphism(a);
  if (anti.verdict != Verdict::Exists) return with_verified("graded-albert", spec, a, anti);
  Certificate c;
  try {
    c = normalize_to_grading(a, *anti.witness);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonSquareInvariant) throw;
    c.verdict = Verdict::NotExists;
    c.property = WitnessProperty::SquareIsNu;
    c.reason_tag = "albert";
    c.trace.push_back(e.what());
  }
  c.trace.insert(c.trace.begin(), anti.trace.begin(), anti.trace.end());
  if (classify_css(a).type == CssType::Even) {
    SquareInvariant inv = superanti_square_invariant(a, *anti.witness);
    c.invariant_data = inv.value;
    c.trace.push_back("square invariant eta(a) a = " + inv.value.to_string() + "; matches z^2 class: " +
                      (check_z_square_corollary(a, *anti.witness) ? "yes" : "no"));
  }
  return with_verified("graded-albert", spec, a, c);
}

bool is_odd_quadratic_tensor(const SuperAlgebra& a) {
  const RecipePtr& r = a.recipe();
  return r && r->kind == RecipeKind::Tensor && r->children.size() == 2 &&
         r->children[1]->kind == RecipeKind::Quadratic && classify_css(a).type == CssType::Odd &&
         r->children[0]->kind != RecipeKind::Quadratic;
}

Outcome cmd_second_kind(const json& spec) {
  SuperAlgebra a = build_algebra("second-kind", spec);
  const RecipePtr& r = a.recipe();
  Certificate c;
  if (r && r->kind == RecipeKind::Quadratic) {
    c = quadratic_second_kind(r->params.at(0));
  } else if (is_odd_quadratic_tensor(a)) {
    c = odd_type_second_kind(a);
  } else {
    c = decide_superinvolution_second_kind(a);
  }
  return with_verified("second-kind", spec, a, c);
}

Outcome cmd_nu_square(const json& spec) {
  SuperAlgebra a = build_algebra("nu-square", spec);
  return with_verified("nu-square", spec, a, nu_square_second_kind_obstruction(a));
}

Outcome cmd_cor(const json& spec) {
  SuperAlgebra a = build_algebra("cor", spec);
  Corestriction c = build_corestriction(a);
  json doc = header("cor", spec);
  json cor;
  cor["dim"] = c.cor.dim();
  cor["t_dim"] = c.t.dim();
  json basis = json::array();
  for (const auto& b : c.basis) basis.push_back(render_vec(b));
  cor["basis"] = basis;
  cor["pi_multiplicative"] = c.pi_multiplicative;
  const RecipePtr& r = a.recipe();
  if (r && r->kind == RecipeKind::Quadratic) {
    json span = json::array();
    bool all_in = true;
    for (const auto& v : quadratic_cor_spanning_set(a)) {
      span.push_back(render_vec(v));
      all_in = all_in && superalg::apply(c.pi, v) == v;
    }
    cor["spanning_set"] = span;
    cor["spanning_set_fixed_by_pi"] = all_in;
  }
  if (auto xi = second_kind_starter(a)) {
    auto cent = cor_centralizer(a, *xi, c);
    cor["centralizer_dim"] = cent.size();
    cor["centralizer_contains_K"] = in_span(cent, theta_matrix(a));
  } else {
    cor["centralizer_dim"] = nullptr;
    cor["centralizer_contains_K"] = nullptr;
  }
  doc["verdict"] = "Computed";
  doc["corestriction"] = cor;
  return {doc, 0};
}

Outcome cmd_clifford(const json& spec) {
  SuperAlgebra a = build_algebra("clifford", spec);
  Field f = spec_field("clifford", spec);
  auto q = parse_scalar_list(f, spec["algebra"]["clifford"], "/algebra/clifford");
  return with_verified("clifford", spec, a, clifford_first_kind(f, q));
}

Outcome run_command(const std::string& command, const json& spec);

// ---- verify ----------------------------------------------------------------

WitnessProperty parse_property(const json& j) {
  for (auto p : {WitnessProperty::Superinvolution, WitnessProperty::Superantiautomorphism, WitnessProperty::SquareIsNu})
    if (j.is_string() && j.get<std::string>() == to_string(p)) return p;
  parse_fail("/witness/property", "unknown witness property");
}

json verify_result(const json& doc, bool ok, const std::string& detail, const json& violation = nullptr) {
  json out;
  out["schema"] = kSchema;
  out["tool"] = kTool;
  out["command"] = "verify";
  out["verified_command"] = doc.value("command", "");
  out["result"] = ok ? "pass" : "fail";
  out["detail"] = detail;
  out["violation"] = violation;
  return out;
}

Outcome cmd_verify(const json& doc) {
  if (!doc.is_object()) parse_fail("", "document must be an object");
  if (doc.value("schema", "") != std::string(kSchema)) parse_fail("/schema", "expected schema \"v1\"");
  if (!doc.contains("command") || !doc["command"].is_string()) parse_fail("/command", "missing command");
  const std::string command = doc["command"];
  const json& spec = field_of(doc, "input", "");
  if (!doc.contains("witness") || doc["witness"].is_null()) {
    // Nothing to check axiomatically: recompute and compare.
    Outcome again = run_command(command, spec);
    bool same = again.doc == doc;
    return {verify_result(doc, same, same ? "document reproduced exactly" : "recomputed document differs"),
            same ? 0 : 5};
  }
  SuperAlgebra a = build_algebra(command, spec);
  const Field& f = a.field();
  const json& w = doc["witness"];
  const json& mj = field_of(w, "matrix", "/witness");
  if (!mj.is_array() || mj.size() != a.dim()) parse_fail("/witness/matrix", "expected dim rows");
  Matrix m(f, a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!mj[i].is_array() || mj[i].size() != a.dim()) parse_fail("/witness/matrix/" + std::to_string(i), "expected dim entries");
    for (std::size_t j = 0; j < a.dim(); ++j)
      m(i, j) = parse_scalar(f, mj[i][j], "/witness/matrix/" + std::to_string(i) + "/" + std::to_string(j));
  }
  Certificate c;
  c.verdict = Verdict::Exists;
  c.property = parse_property(field_of(w, "property", "/witness"));
  int parity = parse_int(field_of(w, "parity", "/witness"), "/witness/parity");
  const json& sl = field_of(w, "semilinear", "/witness");
  if (!sl.is_boolean()) parse_fail("/witness/semilinear", "expected a boolean");
  c.witness = GradedMap{m, parity, sl.get<bool>()};
  AxiomReport r;
  try {
    r = verify_witness(a, c);
  } catch (const Error& e) {
    r.ok = false;
    r.detail = e.what();
  }
  json violation = nullptr;
  if (r.violation) violation = json::array({r.violation->first, r.violation->second});
  return {verify_result(doc, r.ok, r.ok ? "all axioms hold" : r.detail, violation), r.ok ? 0 : 5};
}

Outcome run_command(const std::string& command, const json& spec) {
  if (command == "classify") return cmd_classify(spec);
  if (command == "first-kind") return cmd_first_kind(spec);
  if (command == "graded-albert") return cmd_graded_albert(spec);
  if (command == "second-kind") return cmd_second_kind(spec);
  if (command == "nu-square") return cmd_nu_square(spec);
  if (command == "cor") return cmd_cor(spec);
  if (command == "clifford") return cmd_clifford(spec);
  if (command == "verify") return cmd_verify(spec);
  parse_fail("/command", "unknown command " + command);
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return 2;
    case ErrorCode::UnsupportedCenterFactorization:
    case ErrorCode::UnsupportedDimension:
    case ErrorCode::UnsupportedField:
    case ErrorCode::UnsupportedA0:
    case ErrorCode::UnsupportedShape:
    case ErrorCode::FactorizationTooHard:
      return 4;
    default: return 3;
  }
}

Outcome error_outcome(const std::string& command, const json& spec, int exit_code, const std::string& code,
                      const std::string& location, const std::string& message) {
  json doc = header(command, spec);
  doc["error"] = {{"code", code}, {"location", location}, {"message", message}};
  return {doc, exit_code};
}

Outcome run_guarded(const std::string& command, const json& spec) {
  try {
    return run_command(command, spec);
  } catch (const SpecError& e) {
    return error_outcome(command, spec, e.exit_code, e.code, e.location, e.message);
  } catch (const Error& e) {
    return error_outcome(command, spec, exit_for(e.code()), std::string(to_string(e.code())), "", e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_outcome(command, spec, 2, "ParseError", "", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact superalgebra classification and superinvolution certificates"};
  std::string command, in_path, out_path;
  unsigned jobs = 1;
  long search_bound = 0;
  app.add_option("command", command, "classify | first-kind | graded-albert | second-kind | nu-square | cor | clifford | verify")
      ->required()
      ->check(CLI::IsMember({"classify", "first-kind", "graded-albert", "second-kind", "nu-square", "cor", "clifford",
                             "verify"}));
  app.add_option("--in", in_path, "input JSON (spec, document, or array of them); - for stdin")->required();
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--jobs", jobs, "evaluate batch entries concurrently")->check(CLI::PositiveNumber);
  app.add_option("--search-bound", search_bound, "norm-equation search bound")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  // The environment variable wins over the flag.
  if (search_bound > 0 && !std::getenv("SUPERALG_SEARCH_BOUND"))
    setenv("SUPERALG_SEARCH_BOUND", std::to_string(search_bound).c_str(), 1);

  std::string text;
  if (in_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(in_path);
    if (!in) {
      std::cerr << "superalg: cannot read " << in_path << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  json input;
  std::vector<Outcome> results;
  bool batch = false;
  try {
    input = json::parse(text);
  } catch (const json::parse_error& e) {
    results.push_back(error_outcome(command, nullptr, 2, "ParseError", "byte " + std::to_string(e.byte), e.what()));
  }
  if (results.empty()) {
    batch = input.is_array();
    std::vector<json> specs = batch ? input.get<std::vector<json>>() : std::vector<json>{input};
    results.resize(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < specs.size();) results[i] = run_guarded(command, specs[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::min<std::size_t>(jobs, specs.size()); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }

  int rc = 0;
  json out = json::array();
  for (const auto& r : results) {
    rc = std::max(rc, r.exit_code);
    out.push_back(r.doc);
    if (r.doc.contains("error")) std::cerr << "superalg: " << r.doc["error"]["message"].get<std::string>() << "\n";
    if (r.doc.value("result", "") == "fail") {
      std::cerr << "superalg: verify failed: " << r.doc["detail"].get<std::string>();
      if (!r.doc["violation"].is_null()) std::cerr << " at basis pair " << r.doc["violation"].dump();
      std::cerr << "\n";
    }
  }
  std::string dumped = (batch ? out : out[0]).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << dumped;
  } else {
    std::ofstream o(out_path);
    o << dumped;
    if (!o) {
      std::cerr << "superalg: cannot write " << out_path << "\n";
      return 3;
    }
  }
  return rc;
}
