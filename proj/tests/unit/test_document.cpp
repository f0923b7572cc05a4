#include <doctest.h>

#include <string>

#include "liecc/catalog.hpp"
#include "liecc/document.hpp"
#include "liecc/errors.hpp"

using liecc::Field;
using liecc::LieAlgebra;
using liecc::Scalar;

namespace {

std::string error_of(const std::string& text) {
  try {
    liecc::algebra_from_json(text);
  } catch (const liecc::InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("documents round-trip for every catalog entry") {
  for (const auto& e : liecc::catalog_entries()) {
    for (Field f : {Field::real, Field::complex}) {
      if (e.real_only && f == Field::complex) continue;
      LieAlgebra L = liecc::instantiate(e.name, liecc::sample_parameters(e).front(), f);
      liecc::json doc = liecc::algebra_to_json(L);
      LieAlgebra back = liecc::algebra_from_json(doc.dump());
      CHECK(back == L);
      CHECK(back.basis_names() == L.basis_names());
      CHECK(liecc::algebra_to_json(back) == doc);
    }
  }
}

TEST_CASE("coefficients are exact strings") {
  LieAlgebra L(2, {{0, 1, 1, Scalar(-3, 4)}});
  auto doc = liecc::algebra_to_json(L);
  CHECK(doc["brackets"][0]["terms"][0]["coeff"] == "-3/4");
  CHECK(doc["brackets"][0]["i"] == 1);
  LieAlgebra C(2, {{0, 1, 1, Scalar::parse("1/2+1 i")}}, Field::complex);
  CHECK(liecc::algebra_from_json(liecc::algebra_to_json(C).dump()) == C);
}

TEST_CASE("errors are located") {
  CHECK(error_of("{\"dim\": 2,\n \"brackets\": [}") .find("line 2") != std::string::npos);
  CHECK(error_of(R"({"dim":2,"brackets":[{"i":1,"j":2,"terms":[{"k":2,"coeff":"1/0"}]}]})")
            .find("/brackets/0/terms/0/coeff") != std::string::npos);
  CHECK(error_of(R"({"dim":2,"brackets":[{"i":1,"j":2,"terms":[{"k":2,"coeff":0.5}]}]})").find("fraction string") !=
        std::string::npos);
  CHECK(error_of(R"({"dim":2,"brackets":[{"i":2,"j":1,"terms":[]}]})").find("i < j") != std::string::npos);
  CHECK(error_of(R"({"dim":2,"brackets":[{"i":1,"j":3,"terms":[]}]})").find("/brackets/0/j") != std::string::npos);
  CHECK(error_of(R"({"dim":3,"brackets":[{"i":1,"j":2,"terms":[]},{"i":1,"j":2,"terms":[]}]})").find("duplicate") !=
        std::string::npos);
  CHECK(error_of(R"({"version":7,"dim":1})").find("/version") != std::string::npos);
  CHECK(error_of(R"({"dim":2,"field":"real","brackets":[{"i":1,"j":2,"terms":[{"k":2,"coeff":"i"}]}]})")
            .find("Gaussian") != std::string::npos);
  CHECK(error_of(R"({"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"coeff":"1"}]},
                     {"i":1,"j":3,"terms":[{"k":1,"coeff":"1"}]}]})")
            .find("Jacobi") != std::string::npos);
}

TEST_CASE("matrix input") {
  auto m = liecc::matrix_from_json(R"([["1","1/2"],[0,"-3"]])");
  CHECK(m(0, 1) == Scalar(1, 2));
  CHECK(m(1, 0).is_zero());
  CHECK(liecc::matrix_from_json(R"({"matrix":[["2"]]})")(0, 0) == Scalar(2));
  CHECK_THROWS_AS(liecc::matrix_from_json(R"([["1","2"]])"), liecc::InputError);
  CHECK_THROWS_AS(liecc::matrix_from_json("[]"), liecc::InputError);
  CHECK(liecc::matrix_to_json(m).dump() == R"([["1","1/2"],["0","-3"]])");
}
