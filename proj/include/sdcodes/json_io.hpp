#pragma once

// JSON form of codes and ideals. See docs/FORMATS.md for the schema.

#include <string>

#include <json.hpp>

#include "sdcodes/enumerator.hpp"

namespace sdcodes {

nlohmann::json element_to_json(const FqElem& a);
FqElem element_from_json(const FieldSpec& field, const nlohmann::json& j);

// {"basis": "xm1" | "std", "coeffs": [element, ...]}
nlohmann::json poly_to_json(const std::vector<FqElem>& coeffs, std::string_view basis);

nlohmann::json descriptor_to_json(const CaseDescriptor& d);

nlohmann::json code_to_json(const CodeSpec& code);

// Generators of a cyclic or negacyclic ideal together with the field header.
nlohmann::json ideal_to_json(const FieldSpec& field, unsigned s, const RIdealGens& gens);

struct ImportedIdeal {
  FieldSpec field;
  unsigned s;
  RIdealGens gens;
};

// Reads the field header and generators of either document kind. Throws
// std::invalid_argument on any schema violation.
ImportedIdeal ideal_from_json(const nlohmann::json& j);

// Rebuilds the code from (p, m, modulus, s, k, params) and checks that the
// stored b(x) and generators agree with the rebuilt ones.
CodeSpec code_from_json(const nlohmann::json& j);

}  // namespace sdcodes
