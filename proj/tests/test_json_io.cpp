#include <doctest.h>

#include <stdexcept>

#include "sdcodes/json_io.hpp"

using namespace sdcodes;
using nlohmann::json;

TEST_CASE("code documents round-trip") {
  const FieldSpec f9 = find_irreducible(3, 2);
  CodeEnumerator codes(f9, 2);
  const ChainRing ring(f9);
  while (auto code = codes.next()) {
    const json doc = code_to_json(*code);
    const json reparsed = json::parse(doc.dump());
    const CodeSpec back = code_from_json(reparsed);
    CHECK(back.params == code->params);
    CHECK(back.b == code->b);
    CHECK(back.generators.generators == code->generators.generators);
    CHECK(is_self_dual(ring, back.generators) == is_self_dual(ring, code->generators));
    CHECK(code_to_json(back) == doc);
  }
}

TEST_CASE("schema fields") {
  const FieldSpec f3 = find_irreducible(3, 1);
  const CodeSpec code = build_code(f3, 2, descriptor_for_k(3, 2, 2), {f3.one()});
  const json doc = code_to_json(code);
  CHECK(doc["p"] == 3);
  CHECK(doc["m"] == 1);
  CHECK(doc["s"] == 2);
  CHECK(doc["modulus"] == json::array({0, 1}));
  CHECK(doc["case"] == "even_k");
  CHECK(doc["nu"] == 1);
  CHECK(doc["k"] == 2);
  CHECK(doc["params"] == json::parse("[[1]]"));
  CHECK(doc["b"]["basis"] == "xm1");
  CHECK(doc["b"]["coeffs"] == json::parse("[[0],[0],[2],[0]]"));
  CHECK(doc["generators"].size() == 2);
  CHECK(doc["generators"][0]["basis"] == "std");
  CHECK(doc["generators"][0]["coeffs"].size() == 9);
  CHECK(doc["ring_sign"] == 1);
}

TEST_CASE("negacyclic ideals round-trip") {
  const FieldSpec f3 = find_irreducible(3, 1);
  const CodeSpec code = build_code(f3, 1, descriptor_for_k(3, 1, 1), {});
  const RIdealGens phi = to_negacyclic(code);
  const ImportedIdeal back = ideal_from_json(json::parse(ideal_to_json(f3, 1, phi).dump()));
  CHECK(back.gens.ring_sign == -1);
  CHECK(back.gens.generators == phi.generators);
  CHECK(back.field == f3);
}

TEST_CASE("malformed documents are rejected") {
  const FieldSpec f3 = find_irreducible(3, 1);
  const json good = code_to_json(build_code(f3, 2, descriptor_for_k(3, 2, 2), {f3.one()}));

  json j = good;
  j.erase("p");
  CHECK_THROWS_AS(code_from_json(j), std::invalid_argument);

  j = good;
  j["params"] = json::parse("[[1],[2]]");
  CHECK_THROWS_AS(code_from_json(j), std::invalid_argument);

  j = good;
  j["params"] = json::parse("[[2]]");  // generators no longer match
  CHECK_THROWS_AS(code_from_json(j), std::invalid_argument);

  j = good;
  j["generators"][0]["coeffs"][0][0] = json::parse("[3]");
  CHECK_THROWS_AS(ideal_from_json(j), std::invalid_argument);

  j = good;
  j["modulus"] = json::parse("[1, 0, 1]");  // degree disagrees with m
  CHECK_THROWS_AS(ideal_from_json(j), std::invalid_argument);

  j = good;
  j["case"] = "odd_k";
  CHECK_THROWS_AS(code_from_json(j), std::invalid_argument);

  j = good;
  j["generators"][1]["coeffs"].erase(0);
  CHECK_THROWS_AS(ideal_from_json(j), std::invalid_argument);
}
