#include "nhosc/json_io.h"

#include "nhosc/errors.h"

namespace nhosc {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return v;
}

Json keyed_value(std::initializer_list<std::pair<const char*, int>> keys, const Rational& value) {
  Json e = Json::object();
  for (const auto& [name, v] : keys) e[name] = v;
  e["value"] = rational_to_json(value);
  return e;
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rationals must be \"num/den\" strings");
  return Rational::parse(j.get<std::string>());
}

Json complex_to_json(const ComplexRational& c) {
  return Json{{"re", rational_to_json(c.re())}, {"im", rational_to_json(c.im())}};
}

ComplexRational complex_from_json(const Json& j) {
  return {rational_from_json(field(j, "re")), rational_from_json(field(j, "im"))};
}

Json poly_to_json(const LaurentBiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(Json{{"zPow", e.z},
                       {"zbarPow", e.zbar},
                       {"re", rational_to_json(c.re())},
                       {"im", rational_to_json(c.im())}});
  }
  return out;
}

LaurentBiPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  LaurentBiPoly p;
  for (const auto& t : j) {
    const int zp = int_field(t, "zPow");
    if (zp < 0) throw ParseError("negative z power in polynomial");
    p.add_term(zp, int_field(t, "zbarPow"), complex_from_json(t));
  }
  return p;
}

Json params_to_json(const ModelParams& p) {
  Json f = Json::array();
  for (const auto& c : p.f_coefficients()) f.push_back(complex_to_json(c));
  Json out{{"lambda", rational_to_json(p.lambda())}, {"F", f}};
  out["b"] = p.is_quartic() ? rational_to_json(p.b()) : Json();
  out["omega"] = p.is_quartic() ? rational_to_json(p.omega()) : Json();
  return out;
}

ModelParams params_from_json(const Json& j) {
  const Rational lambda = rational_from_json(field(j, "lambda"));
  std::vector<ComplexRational> f;
  for (const auto& c : array_field(j, "F")) f.push_back(complex_from_json(c));
  ModelParams p = ModelParams::general(lambda, std::move(f));
  const Json& b = field(j, "b");
  const Json& omega = field(j, "omega");
  if (p.is_quartic()) {
    if (b.is_null() || omega.is_null() || rational_from_json(b) != p.b() || rational_from_json(omega) != p.omega()) {
      throw ParseError("params: b/omega disagree with F");
    }
  } else if (!b.is_null() || !omega.is_null()) {
    throw ParseError("params: b/omega given for a non-quartic F");
  }
  return p;
}

Json ansatz_to_json(const AnsatzFn& f) {
  return Json{{"params", params_to_json(f.params())}, {"poly", poly_to_json(f.poly())}};
}

AnsatzFn ansatz_from_json(const Json& j) {
  LaurentBiPoly poly = poly_from_json(field(j, "poly"));
  if (poly.has_negative_powers()) throw ParseError("ansatz polynomial has negative z̄ powers");
  return AnsatzFn(std::move(poly), params_from_json(field(j, "params")));
}

Json constants_to_json(const ConstantsRecord& c) {
  Json a = Json::array(), top = Json::array(), alpha = Json::array(), beta = Json::array();
  Json norms = Json::array(), scale = Json::array();
  for (const auto& [nk, v] : c.a) a.push_back(keyed_value({{"n", nk.first}, {"k", nk.second}}, v));
  for (const auto& [m, v] : c.c_top) top.push_back(keyed_value({{"m", m}}, v));
  for (const auto& [key, v] : c.alpha) alpha.push_back(keyed_value({{"n", key.n}, {"k", key.k}, {"i", key.i}}, v));
  for (const auto& [key, v] : c.beta) beta.push_back(keyed_value({{"n", key.n}, {"k", key.k}, {"i", key.i}}, v));
  for (const auto& [nk, v] : c.norms) norms.push_back(keyed_value({{"n", nk.first}, {"k", nk.second}}, v));
  for (const auto& [n, v] : c.gram_scale) scale.push_back(keyed_value({{"n", n}}, v));
  return Json{{"a", a}, {"cTop", top}, {"alpha", alpha}, {"beta", beta}, {"norms", norms}, {"gramScale", scale}};
}

ConstantsRecord constants_from_json(const Json& j) {
  ConstantsRecord c;
  auto value = [](const Json& e) { return rational_from_json(field(e, "value")); };
  for (const auto& e : array_field(j, "a")) c.a[{int_field(e, "n"), int_field(e, "k")}] = value(e);
  for (const auto& e : array_field(j, "cTop")) c.c_top[int_field(e, "m")] = value(e);
  for (const auto& e : array_field(j, "alpha")) {
    c.alpha[{int_field(e, "n"), int_field(e, "k"), int_field(e, "i")}] = value(e);
  }
  for (const auto& e : array_field(j, "beta")) {
    c.beta[{int_field(e, "n"), int_field(e, "k"), int_field(e, "i")}] = value(e);
  }
  for (const auto& e : array_field(j, "norms")) c.norms[{int_field(e, "n"), int_field(e, "k")}] = value(e);
  for (const auto& e : array_field(j, "gramScale")) c.gram_scale[int_field(e, "n")] = value(e);
  return c;
}

Json cell_to_json(const JordanCell& cell) {
  Json chain = Json::array();
  for (const auto& f : cell.chain) chain.push_back(ansatz_to_json(f));
  return Json{{"n", cell.n},
              {"energy", rational_to_json(cell.energy)},
              {"p", cell.p},
              {"chain", chain},
              {"constants", constants_to_json(cell.constants)}};
}

JordanCell cell_from_json(const Json& j) {
  JordanCell cell;
  cell.n = int_field(j, "n");
  cell.energy = rational_from_json(field(j, "energy"));
  cell.p = int_field(j, "p");
  for (const auto& f : array_field(j, "chain")) cell.chain.push_back(ansatz_from_json(f));
  if (cell.chain.empty()) throw ParseError("cell has an empty chain");
  cell.constants = constants_from_json(field(j, "constants"));
  if (!cell.constants.gram_scale.contains(cell.n)) throw ParseError("cell is missing its gramScale entry");
  return cell;
}

Json cells_file_to_json(const std::vector<JordanCell>& cells) {
  Json list = Json::array();
  for (const auto& c : cells) list.push_back(cell_to_json(c));
  Json out{{"format", kCellsFormat}};
  out["params"] = cells.empty() ? Json() : params_to_json(cells.front().params());
  out["cells"] = list;
  return out;
}

std::vector<JordanCell> cells_file_from_json(const Json& j) {
  const Json& format = field(j, "format");
  if (!format.is_string() || format.get<std::string>() != kCellsFormat) {
    throw ParseError(std::string("unsupported cells format, expected ") + kCellsFormat);
  }
  std::vector<JordanCell> cells;
  for (const auto& c : array_field(j, "cells")) cells.push_back(cell_from_json(c));
  if (!cells.empty()) {
    const ModelParams params = params_from_json(field(j, "params"));
    for (const auto& cell : cells) {
      for (const auto& f : cell.chain) {
        if (!(f.params() == params)) throw ParseError("chain function params differ from the file params");
      }
    }
  }
  return cells;
}

Json spectrum_to_json(const ModelParams& params, const std::vector<EnergyLevel>& levels) {
  Json table = Json::array();
  for (const auto& l : levels) table.push_back(Json{{"n", l.n}, {"energy", rational_to_json(l.energy)}});
  return Json{{"params", params_to_json(params)}, {"levels", table}};
}

Json pi_rational_to_json(const PiRational& v) {
  Json out = complex_to_json(v.coefficient);
  out["unit"] = kPiUnit;
  return out;
}

Json gram_matrix_to_json(const GramMatrix& g) {
  Json idx = Json::array();
  for (const auto& i : g.indices) idx.push_back(Json{{"n", i.n}, {"k", i.k}});
  Json rows = Json::array();
  for (const auto& row : g.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(pi_rational_to_json(e));
    rows.push_back(r);
  }
  return Json{{"indices", idx}, {"entries", rows}};
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks()) {
    Json e{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return Json{{"passed", report.passed()},
              {"counts",
               {{"PASS", report.count(CheckStatus::Pass)},
                {"FAIL", report.count(CheckStatus::Fail)},
                {"WARN", report.count(CheckStatus::Warn)}}},
              {"checks", checks}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace nhosc
