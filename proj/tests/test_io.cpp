#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "qlab/cli.hpp"

using namespace qlab;
using nlohmann::json;

TEST_CASE("quantaloid documents round-trip") {
  for (auto q : {builtin_boolean(), builtin_lukasiewicz(4), builtin_rel_like(2)}) {
    json doc = quantaloid_json(q);
    Quantaloid back = parse_quantaloid(doc);
    CHECK(same_quantaloid(q, back));
    CHECK(back.dualizing == q.dualizing);
    CHECK(canonical_dump(quantaloid_json(back)) == canonical_dump(doc));
  }
}

TEST_CASE("builtin names parse as quantaloids") {
  Quantaloid q = parse_quantaloid(json("lukasiewicz(3)"));
  CHECK(same_quantaloid(q, builtin_lukasiewicz(3)));
}

TEST_CASE("joins and meets are derived from the order when omitted") {
  json doc = quantaloid_json(builtin_boolean());
  doc["homs"]["*->*"].erase("joins");
  doc["homs"]["*->*"].erase("meets");
  doc["homs"]["*->*"].erase("top");
  doc["homs"]["*->*"].erase("bottom");
  Quantaloid q = parse_quantaloid(doc);
  CHECK(same_quantaloid(q, builtin_boolean()));

  // an order with no lattice structure is a schema error
  json bad = doc;
  bad["homs"]["*->*"]["carrier"] = {"0", "1", "a", "b"};
  bad["homs"]["*->*"]["leq"] = {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}, {"0", "1"}};
  bad["compose"] = json::object();
  CHECK_THROWS_AS(parse_quantaloid(bad), SchemaError);  // a,b have no unique join
}

TEST_CASE("category defaults: unit diagonal, bottom elsewhere") {
  auto ws = builtin_workspace();
  json doc;
  doc["objects"] = {{{"id", "u"}, {"type", "*"}}, {{"id", "v"}, {"type", "*"}}};
  doc["hom"] = {{"u,v", "1"}};
  QCategory cat = parse_category(doc, ws.q);
  CHECK(cat.at(0, 0) == 1);
  CHECK(cat.at(1, 1) == 1);
  CHECK(cat.at(0, 1) == 1);
  CHECK(cat.at(1, 0) == 0);
}

TEST_CASE("workspace round-trip is canonical") {
  Workspace ws = builtin_workspace();
  json doc = workspace_json(ws);
  Workspace back = parse_workspace(doc);
  CHECK(canonical_dump(workspace_json(back)) == canonical_dump(doc));
  CHECK(back.categories.size() == ws.categories.size());
  CHECK(back.distributors.size() == ws.distributors.size());
  CHECK(back.spaces.at("ctx_closure").op == std::vector<int>{2, 3, 2, 3});
  CHECK(dist_eq(back.distributors.at("phi"), ws.distributors.at("phi")));
}

TEST_CASE("the bundled fixture file matches the builtin workspace byte for byte") {
  std::ifstream in("fixtures/ctx_workspace.json");
  REQUIRE(in.good());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(bytes == canonical_dump(workspace_json(builtin_workspace())));
}

TEST_CASE("presheaf literals") {
  auto ws = builtin_workspace();
  const QCategory& a = ws.categories.at("A");
  json doc = {{"type", "*"}, {"values", {{"x1", "1"}}}};
  Presheaf p = parse_presheaf(doc, a);
  CHECK(p == qlab::testing::subset_presheaf(a, {"x1"}));
  CHECK(canonical_dump(presheaf_json(a, p)) ==
        canonical_dump(json{{"type", "*"}, {"values", {{"x1", "1"}, {"x2", "0"}}}}));
}

TEST_CASE("schema errors") {
  auto ws = builtin_workspace();
  CHECK_THROWS_AS(parse_category(json{{"objects", 5}}, ws.q), SchemaError);
  CHECK_THROWS_AS(parse_category(json{{"objects", {{{"id", "x"}, {"type", "nope"}}}}}, ws.q),
                  SchemaError);
  CHECK_THROWS_AS(parse_quantaloid(json{{"objects", {"*"}}}), SchemaError);
  CHECK_THROWS_AS(
      parse_category(json{{"objects", {{{"id", "a,b"}, {"type", "*"}}}}}, ws.q),
      SchemaError);  // comma in identifier
  CHECK_THROWS_AS(parse_functor(json{{"source", "A"}, {"target", "missing"}, {"map", json::object()}},
                                ws),
                  SchemaError);
  CHECK_THROWS_AS(load_workspace("does_not_exist.json"), SchemaError);
}

TEST_CASE("closure space documents resolve against the canonical enumeration") {
  Workspace ws = builtin_workspace();
  QClosureSpace space = resolve_space(ws, ws.spaces.at("ctx_closure"));
  CHECK(closed_indices(space).size() == 2);

  ClosureSpaceDoc bad{"A", {0, 0, 0, 0}};  // constant-to-bottom is not a closure
  CHECK_THROWS_AS(resolve_space(ws, bad), std::invalid_argument);
  ClosureSpaceDoc short_map{"A", {0, 1}};
  CHECK_THROWS_AS(resolve_space(ws, short_map), std::invalid_argument);
}

TEST_CASE("lattice documents") {
  Workspace ws = builtin_workspace();
  FixedPointLattice m = concept_lattice(ws.distributors.at("phi"));
  json doc = lattice_json(m);
  CHECK(doc["kind"] == "concepts");
  REQUIRE(doc["concepts"].size() == 2);
  CHECK(doc["concepts"][0]["extent"]["x1"] == "1");
  CHECK(doc["concepts"][0]["intent"]["y1"] == "1");
  CHECK(doc["hom"]["c0,c1"] == "1");
  CHECK(doc["hom"]["c1,c0"] == "0");

  FixedPointLattice k = kan_lattice(ws.distributors.at("phi"));
  json kd = lattice_json(k);
  CHECK(kd["kind"] == "kan");
  CHECK_FALSE(kd["concepts"][0].contains("intent"));
}

TEST_CASE("canonical dumps are deterministic") {
  Workspace ws = builtin_workspace();
  CHECK(canonical_dump(workspace_json(ws)) == canonical_dump(workspace_json(ws)));
}
