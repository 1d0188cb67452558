#include "sdcodes/json_io.hpp"

#include <stdexcept>

namespace sdcodes {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T require_uint(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_unsigned()) throw std::invalid_argument(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<T>();
}

json rvector_to_json(const RVector& g) {
  json coeffs = json::array();
  for (const auto& e : g) coeffs.push_back(json::array({element_to_json(e.a), element_to_json(e.b)}));
  return {{"basis", "std"}, {"coeffs", std::move(coeffs)}};
}

RVector rvector_from_json(const FieldSpec& field, const json& j) {
  if (require(j, "basis") != "std") throw std::invalid_argument("generators must use the standard basis");
  const json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) throw std::invalid_argument("'coeffs' must be an array");
  RVector out;
  for (const auto& pair : coeffs) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("ring element must be [a, b]");
    out.push_back({element_from_json(field, pair[0]), element_from_json(field, pair[1])});
  }
  return out;
}

FieldSpec field_from_json(const json& j) {
  const auto p = require_uint<Residue>(j, "p");
  const auto m = require_uint<unsigned>(j, "m");
  const json& mod = require(j, "modulus");
  if (!mod.is_array()) throw std::invalid_argument("'modulus' must be an integer array");
  std::vector<Residue> modulus;
  for (const auto& c : mod) {
    if (!c.is_number_unsigned()) throw std::invalid_argument("'modulus' must be an integer array");
    modulus.push_back(c.get<Residue>());
  }
  return FieldSpec(p, m, std::move(modulus));
}

json field_header(const FieldSpec& field, unsigned s) {
  return {{"p", field.p()}, {"m", field.m()}, {"s", s}, {"modulus", field.modulus()}};
}

}  // namespace

json element_to_json(const FqElem& a) { return a.coeffs; }

FqElem element_from_json(const FieldSpec& field, const json& j) {
  if (!j.is_array() || j.size() != field.m()) {
    throw std::invalid_argument("field element must be an array of " + std::to_string(field.m()) + " integers");
  }
  std::vector<Residue> c;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw std::invalid_argument("field element entries must be non-negative integers");
    c.push_back(v.get<Residue>());
  }
  return field.element(std::move(c));
}

json poly_to_json(const std::vector<FqElem>& coeffs, std::string_view basis) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(element_to_json(c));
  return {{"basis", basis}, {"coeffs", std::move(arr)}};
}

json descriptor_to_json(const CaseDescriptor& d) {
  return {{"branch", d.branch}, {"case", to_string(d.sub)}, {"nu", d.nu},   {"k", d.k},
          {"delta", d.delta},   {"l", d.l},                 {"j_lo", d.j_lo}, {"j_hi", d.j_hi},
          {"free_params", d.free_param_count}, {"t", d.t}};
}

json ideal_to_json(const FieldSpec& field, unsigned s, const RIdealGens& gens) {
  json j = field_header(field, s);
  json arr = json::array();
  for (const auto& g : gens.generators) arr.push_back(rvector_to_json(g));
  j["generators"] = std::move(arr);
  j["ring_sign"] = gens.ring_sign;
  return j;
}

json code_to_json(const CodeSpec& code) {
  json j = field_header(code.field, code.s);
  j["case"] = to_string(code.descriptor.sub);
  j["branch"] = code.descriptor.branch;
  j["nu"] = code.descriptor.nu;
  j["k"] = code.descriptor.k;
  json params = json::array();
  for (const auto& a : code.params) params.push_back(element_to_json(a));
  j["params"] = std::move(params);
  j["b"] = poly_to_json(code.b.coeffs, "xm1");
  json arr = json::array();
  for (const auto& g : code.generators.generators) arr.push_back(rvector_to_json(g));
  j["generators"] = std::move(arr);
  j["ring_sign"] = code.generators.ring_sign;
  return j;
}

ImportedIdeal ideal_from_json(const json& j) {
  FieldSpec field = field_from_json(j);
  const auto s = require_uint<unsigned>(j, "s");
  const std::uint64_t n = checked_pow(field.p(), s);
  RIdealGens gens;
  if (j.contains("ring_sign")) {
    const json& sign = j.at("ring_sign");
    if (!sign.is_number_integer()) throw std::invalid_argument("'ring_sign' must be 1 or -1");
    gens.ring_sign = sign.get<int>();
  }
  const json& arr = require(j, "generators");
  if (!arr.is_array()) throw std::invalid_argument("'generators' must be an array");
  for (const auto& g : arr) {
    RVector v = rvector_from_json(field, g);
    if (v.size() != n) throw std::invalid_argument("generator length differs from p^s");
    gens.generators.push_back(std::move(v));
  }
  validate(ChainRing(field), gens);
  return {std::move(field), s, std::move(gens)};
}

CodeSpec code_from_json(const json& j) {
  ImportedIdeal ideal = ideal_from_json(j);
  const auto k = require_uint<std::uint64_t>(j, "k");
  const CaseDescriptor desc = descriptor_for_k(ideal.field.p(), ideal.s, k);
  if (j.contains("case") && parse_case_tag(j.at("case").get<std::string>()) != desc.sub) {
    throw std::invalid_argument("'case' does not match k");
  }
  std::vector<FqElem> params;
  const json& arr = require(j, "params");
  if (!arr.is_array()) throw std::invalid_argument("'params' must be an array");
  for (const auto& a : arr) params.push_back(element_from_json(ideal.field, a));
  CodeSpec code = build_code(ideal.field, ideal.s, desc, params);
  if (j.contains("b")) {
    const json& b = j.at("b");
    if (require(b, "basis") != "xm1") throw std::invalid_argument("'b' must use the xm1 basis");
    std::vector<FqElem> coeffs;
    for (const auto& c : require(b, "coeffs")) coeffs.push_back(element_from_json(ideal.field, c));
    if (coeffs != code.b.coeffs) throw std::invalid_argument("stored b(x) does not match the parameters");
  }
  if (ideal.gens.ring_sign != 1) throw std::invalid_argument("a code document must be cyclic (ring_sign 1)");
  if (ideal.gens.generators != code.generators.generators) {
    throw std::invalid_argument("stored generators do not match the parameters");
  }
  return code;
}

}  // namespace sdcodes
