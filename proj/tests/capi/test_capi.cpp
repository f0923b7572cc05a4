// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <thread>

#include "liecc/liecc.h"

using json = nlohmann::json;

namespace {

json take(char* s) {
  json j = json::parse(s);
  liecc_string_free(s);
  return j;
}

const char* kHeisenberg = R"({"version":1,"dim":3,"field":"real","brackets":[{"i":1,"j":2,"terms":[{"k":3,"coeff":"1"}]}]})";

}  // namespace

TEST_CASE("algebra handles round-trip") {
  liecc_algebra* a = nullptr;
  REQUIRE(liecc_algebra_from_json(kHeisenberg, &a) == LIECC_OK);
  CHECK(liecc_algebra_dim(a) == 3);
  CHECK(liecc_algebra_field(a) == LIECC_FIELD_REAL);
  char* out = nullptr;
  REQUIRE(liecc_algebra_to_json(a, &out) == LIECC_OK);
  json doc = take(out);
  CHECK(doc["basis"] == json::array({"e1", "e2", "e3"}));
  liecc_algebra* c = nullptr;
  REQUIRE(liecc_algebra_with_field(a, LIECC_FIELD_COMPLEX, &c) == LIECC_OK);
  CHECK(liecc_algebra_field(c) == LIECC_FIELD_COMPLEX);
  liecc_algebra_free(c);
  liecc_algebra_free(a);
  liecc_algebra_free(nullptr);
}

TEST_CASE("typed queries") {
  liecc_algebra* a = nullptr;
  REQUIRE(liecc_algebra_from_json(kHeisenberg, &a) == LIECC_OK);
  size_t betti[8];
  size_t count = 0;
  REQUIRE(liecc_betti(a, betti, 8, &count) == LIECC_OK);
  REQUIRE(count == 4);
  CHECK(betti[0] == 1);
  CHECK(betti[1] == 2);
  CHECK(betti[2] == 2);
  CHECK(betti[3] == 1);
  CHECK(liecc_betti(a, betti, 2, &count) == LIECC_ERR_INPUT);
  CHECK(count == 4);
  int flag = -1;
  REQUIRE(liecc_is_complete(a, &flag) == LIECC_OK);
  CHECK(flag == 0);
  REQUIRE(liecc_is_cocomplete(a, &flag) == LIECC_OK);
  CHECK(flag == 0);
  liecc_algebra_free(a);
}

TEST_CASE("errors map to status codes and messages") {
  liecc_algebra* a = nullptr;
  CHECK(liecc_algebra_from_json("{\"dim\": 2, \"brackets\": [", &a) == LIECC_ERR_INPUT);
  CHECK(std::string(liecc_last_error()).find("line") != std::string::npos);
  CHECK(a == nullptr);
  CHECK(liecc_algebra_from_json(nullptr, &a) == LIECC_ERR_INPUT);
  CHECK(liecc_catalog_instantiate("no-such", nullptr, 0, LIECC_FIELD_REAL, &a) == LIECC_ERR_INPUT);
  CHECK(std::string(liecc_last_error()).find("unknown catalog entry") != std::string::npos);
  const char* bad[] = {"-1"};
  CHECK(liecc_catalog_instantiate("s_{3,1}", bad, 1, LIECC_FIELD_REAL, &a) == LIECC_ERR_INPUT);
  CHECK(liecc_catalog_instantiate("so3", nullptr, 0, LIECC_FIELD_COMPLEX, &a) == LIECC_ERR_INPUT);
  REQUIRE(liecc_catalog_instantiate("aff", nullptr, 0, LIECC_FIELD_REAL, &a) == LIECC_OK);
  CHECK(std::string(liecc_last_error()).empty());
  char* out = nullptr;
  CHECK(liecc_cohomology_json(a, 5, &out) == LIECC_ERR_INPUT);
  CHECK(liecc_check_json(a, "everything", &out) == LIECC_ERR_INPUT);
  liecc_algebra_free(a);
}

TEST_CASE("last error is per thread") {
  liecc_algebra* a = nullptr;
  CHECK(liecc_algebra_from_json("[", &a) == LIECC_ERR_INPUT);
  std::string other;
  std::thread t([&] { other = liecc_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(liecc_last_error()).empty());
}

TEST_CASE("structured reports") {
  liecc_algebra* a = nullptr;
  REQUIRE(liecc_catalog_instantiate("s_{4,12}", nullptr, 0, LIECC_FIELD_REAL, &a) == LIECC_OK);
  char* out = nullptr;
  REQUIRE(liecc_check_json(a, "both", &out) == LIECC_OK);
  json j = take(out);
  CHECK(j["complete"]["complete"] == true);
  CHECK(j["complete"]["dim_der"] == 4);
  CHECK(j["cocomplete"]["cocomplete"] == false);
  REQUIRE(liecc_cohomology_json(a, 1, &out) == LIECC_OK);
  CHECK(take(out)["betti"] == 2);
  liecc_algebra_free(a);

  REQUIRE(liecc_catalog_instantiate("s_{4,10}", nullptr, 0, LIECC_FIELD_REAL, &a) == LIECC_OK);
  REQUIRE(liecc_central_extension_json(a, R"({"omega":[{"i":1,"j":4,"value":"1"}]})", &out) == LIECC_OK);
  j = take(out);
  CHECK(j["split"] == true);
  CHECK(j["verified"] == true);
  CHECK(j["witness"]["element"][0] == "-1/2");
  CHECK(liecc_central_extension_json(a, R"({"omega":[{"i":1,"j":2,"value":"1"}]})", &out) == LIECC_ERR_INPUT);
  liecc_algebra_free(a);
}

TEST_CASE("matrix operations") {
  liecc_matrix* d1 = nullptr;
  liecc_matrix* d2 = nullptr;
  REQUIRE(liecc_matrix_from_json(R"([["1","0"],["0","2"]])", &d1) == LIECC_OK);
  REQUIRE(liecc_matrix_from_json(R"([["2","0"],["0","4"]])", &d2) == LIECC_OK);
  CHECK(liecc_matrix_size(d1) == 2);
  char* out = nullptr;
  REQUIRE(liecc_almost_abelian_json(d1, LIECC_FIELD_REAL, &out) == LIECC_OK);
  json j = take(out);
  CHECK(j["eigenvalue_test"]["cocomplete"] == true);
  CHECK(j["b2_via_wedge_action"] == 0);
  REQUIRE(liecc_propsim_json(d2, d1, LIECC_FIELD_REAL, &out) == LIECC_OK);
  j = take(out);
  CHECK(j["equivalent"] == true);
  CHECK(j["witness"]["alpha"] == "2");
  liecc_matrix* bad = nullptr;
  CHECK(liecc_matrix_from_json(R"([["1","0"]])", &bad) == LIECC_ERR_INPUT);
  liecc_matrix_free(d1);
  liecc_matrix_free(d2);
}

TEST_CASE("catalog and classification") {
  char* out = nullptr;
  REQUIRE(liecc_catalog_list("complete", &out) == LIECC_OK);
  CHECK(take(out)["entries"].size() == 7);
  CHECK(liecc_catalog_list("weird", &out) == LIECC_ERR_INPUT);
  REQUIRE(liecc_catalog_describe("s_{4,8}", &out) == LIECC_OK);
  CHECK(take(out)["samples"].size() == 3);
  REQUIRE(liecc_classify3_json(LIECC_FIELD_REAL, &out) == LIECC_OK);
  CHECK(take(out)["family_count"] == 3);
  REQUIRE(liecc_classify3_json(LIECC_FIELD_COMPLEX, &out) == LIECC_OK);
  CHECK(take(out)["family_count"] == 2);
  REQUIRE(liecc_catalog_verify(&out) == LIECC_OK);
  CHECK(take(out)["failures"] == 3);
  CHECK(std::string(liecc_version()).size() > 0);
}
