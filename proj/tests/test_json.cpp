#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gl2cc/json_io.hpp"

using namespace gl2cc;

TEST_CASE("field descriptor") {
  Field F5(5, 1);
  json j = field_to_json(F5);
  CHECK(j["p"] == 5);
  CHECK(j["k"] == 1);
  CHECK(j["modulus"] == json::parse("[0,1]"));

  Field F9(3, 2);
  json j9 = field_to_json(F9);
  CHECK(j9["k"] == 2);
  CHECK(j9["modulus"].size() == 3);
}

TEST_CASE("field elements: prime fields are bare residues") {
  Field F5(5, 1);
  CHECK(felem_to_json(F5, F5.from_packed(4)) == json(4));
  CHECK(felem_from_json(F5, json(4)) == F5.from_packed(4));
  CHECK(felem_from_json(F5, json::parse("[4]")) == F5.from_packed(4));
  CHECK_THROWS_AS(felem_from_json(F5, json(5)), std::invalid_argument);
  CHECK_THROWS_AS(felem_from_json(F5, json::parse("[1,2]")),
                  std::invalid_argument);
}

TEST_CASE("field elements: extension fields are coefficient arrays") {
  Field F9(3, 2);
  FElem x = F9.from_coeffs({1, 2});
  json j = felem_to_json(F9, x);
  CHECK(j == json::parse("[1,2]"));
  CHECK(felem_from_json(F9, j) == x);
  CHECK_THROWS_AS(felem_from_json(F9, json(2)), std::invalid_argument);
  CHECK_THROWS_AS(felem_from_json(F9, json::parse("[1]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(felem_from_json(F9, json::parse("[1,3]")),
                  std::invalid_argument);
}

TEST_CASE("matrices round-trip and match the flat prime-field form") {
  Field F5(5, 1);
  Mat d = diag(F5, F5.from_packed(4), F5.from_packed(1));
  json j = mat_to_json(F5, d);
  CHECK(j == json::parse("[[4,0],[0,1]]"));
  CHECK(mat_from_json(F5, j) == d);
  CHECK_THROWS_AS(mat_from_json(F5, json::parse("[[4,0]]")),
                  std::invalid_argument);

  Field F4(2, 2);
  Mat s = swap_mat(F4);
  CHECK(mat_from_json(F4, mat_to_json(F4, s)) == s);
}

TEST_CASE("groups serialize order and generators only") {
  Field F5(5, 1);
  auto reps = reducible_reps(F5, abelian_shapes_of(2)[0]);
  REQUIRE(reps.size() == 2);
  json j = group_to_json(reps[0].group);
  CHECK(j["order"] == 2);
  CHECK(j["generators"] == json::parse("[[[4,0],[0,1]]]"));
  CHECK(!j.contains("elements"));
}

TEST_CASE("shape json") {
  json klein = json::parse(
      R"({"m":4,"sylows":[{"p":2,"beta":2,"kind":"ElementaryAbelian"}]})");
  AbelianShape shape = shape_from_json(klein);
  CHECK(shape_label(shape) == "(2x2)");
  CHECK(shape_to_json(shape) == klein);

  // layers arrive in any order, leave sorted by prime
  json mixed = json::parse(
      R"({"sylows":[{"p":3,"beta":1,"kind":"Cyclic"},
                    {"p":2,"beta":1,"kind":"Cyclic"}]})");
  CHECK(shape_label(shape_from_json(mixed)) == "2x3");

  CHECK_THROWS_AS(shape_from_json(json::parse(
                      R"({"m":8,"sylows":[{"p":2,"beta":2,"kind":"Cyclic"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(shape_from_json(json::parse(
                      R"({"sylows":[{"p":2,"beta":3,"kind":"Cyclic"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(shape_from_json(json::parse(
                      R"({"sylows":[{"p":2,"beta":1,"kind":"ElementaryAbelian"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(shape_from_json(json::parse(
                      R"({"sylows":[{"p":4,"beta":1,"kind":"Cyclic"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(shape_from_json(json::parse(
                      R"({"sylows":[{"p":2,"beta":1,"kind":"Cyclic"},
                                    {"p":2,"beta":2,"kind":"Cyclic"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(shape_from_json(json::parse(
                      R"({"sylows":[{"p":2,"beta":1,"kind":"cyclic"}]})")),
                  std::invalid_argument);
}

TEST_CASE("count result json") {
  Field F5(5, 1);
  json j = count_to_json(count_reducible(F5, abelian_shapes_of(4)[0]));
  CHECK(j == json::parse(R"({"rho":6,"delta":2,"count":4,"realizable":true})"));
}

TEST_CASE("representatives carry shape, geometry, and construction") {
  Field F5(5, 1);
  auto reps = reducible_reps(F5, abelian_shapes_of(2)[0]);
  json j = representative_to_json(reps[1]);
  CHECK(j["geo"] == "reducible");
  CHECK(j["order"] == 2);
  CHECK(j["generators"] == json::parse("[[[4,0],[0,4]]]"));
  CHECK(j["shape"]["m"] == 2);
  CHECK(j["shape"]["geo"] == "reducible");
  CHECK(!j["shape"].contains("witness"));

  Field F3(3, 1);
  auto specs = imprimitive_specs(F3, 4);
  REQUIRE(specs.size() == 1);
  json cons = imprimitive_construction(specs[0]);
  CHECK(cons["label"] == "L(1):P4");
  CHECK(cons["reflected_order"] == 4);
  CHECK(cons["minus_one"] == false);
  CHECK(cons["torus"].empty());
  json rep = representative_to_json(imprimitive_rep(F3, specs[0]), &cons);
  CHECK(rep["geo"] == "imprimitive");
  CHECK(rep["shape"]["witness"]["order"] == 4);
  CHECK(rep["construction"]["label"] == "L(1):P4");

  auto prim = primitive_specs(F5, 12);
  REQUIRE(prim.size() == 3);
  json pc = primitive_construction(prim[0]);
  CHECK(pc == json::parse(
                  R"x({"label":"cycle(12)","kind":"cyclic","cycle_order":12})x"));
}

TEST_CASE("verify report json") {
  Field F3(3, 1);
  json j = report_to_json(verify_orders(F3, 6));
  CHECK(j["q"] == 3);
  CHECK(j["all_agree"] == true);
  bool saw_excluded = false, saw_ok = false;
  for (const json& row : j["rows"]) {
    if (row["status"] == "excluded") {
      saw_excluded = true;
      CHECK(row["formula"].is_null());
      CHECK(row["note"] == "order shares a factor with q");
    }
    if (row["m"] == 2) {
      saw_ok = true;
      CHECK(row["status"] == "ok");
      CHECK(row["formula"] == 2);
      CHECK(row["oracle"] == 2);
    }
  }
  CHECK(saw_excluded);
  CHECK(saw_ok);
}
