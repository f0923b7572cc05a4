#include <doctest.h>

#include <random>
#include <string>

#include "liecc/errors.hpp"
#include "liecc/lie_algebra.hpp"
#include "oracles.hpp"

using liecc::BracketTerm;
using liecc::Element;
using liecc::Field;
using liecc::LieAlgebra;
using liecc::Matrix;
using liecc::Scalar;

namespace {

LieAlgebra sl2() { return LieAlgebra(3, {{0, 1, 1, Scalar(1)}, {0, 2, 2, Scalar(-1)}, {1, 2, 0, Scalar(1)}}); }
LieAlgebra heisenberg() { return LieAlgebra(3, {{0, 1, 2, Scalar(1)}}); }

}  // namespace

TEST_CASE("brackets are antisymmetric and bilinear") {
  LieAlgebra L = sl2();
  CHECK(L.constant(1, 0, 1) == Scalar(-1));
  CHECK(L.constant(2, 2, 0).is_zero());
  Element x{Scalar(1), Scalar(2), Scalar(0)}, y{Scalar(0), Scalar(1), Scalar(-1)};
  Element xy = L.bracket(x, y), yx = L.bracket(y, x);
  for (std::size_t k = 0; k < 3; ++k) CHECK(xy[k] == -yx[k]);
  CHECK(liecc::is_zero(L.bracket(x, x)));
}

TEST_CASE("Jacobi failures are rejected with the offending triple") {
  try {
    LieAlgebra bad(3, {{0, 1, 2, Scalar(1)}, {0, 2, 0, Scalar(1)}});
    FAIL("expected a Jacobi failure");
  } catch (const liecc::InputError& e) {
    CHECK(std::string(e.what()).find("Jacobi") != std::string::npos);
  }
}

TEST_CASE("a solvable 3-dimensional table passes Jacobi") {
  // [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = e3: every Jacobiator vanishes.
  CHECK_NOTHROW(LieAlgebra(3, {{0, 1, 0, Scalar(1)}, {0, 2, 1, Scalar(1)}, {1, 2, 2, Scalar(1)}}));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(LieAlgebra(2, {{0, 2, 1, Scalar(1)}}), liecc::InputError);
  CHECK_THROWS_AS(LieAlgebra(2, {{0, 1, 1, Scalar::imaginary_unit()}}, Field::real), liecc::InputError);
  CHECK_NOTHROW(LieAlgebra(2, {{0, 1, 1, Scalar::imaginary_unit()}}, Field::complex));
  CHECK_THROWS_AS(LieAlgebra(2, {{0, 1, 1, Scalar::imaginary_unit()}}, Field::complex).with_field(Field::real),
                  liecc::InputError);
  CHECK_NOTHROW(sl2().with_field(Field::complex).with_field(Field::real));
}

TEST_CASE("duplicate terms accumulate") {
  LieAlgebra L(2, {{0, 1, 1, Scalar(1, 2)}, {0, 1, 1, Scalar(1, 2)}});
  CHECK(L.constant(0, 1, 1) == Scalar(1));
}

TEST_CASE("ad is a Lie homomorphism into derivations") {
  LieAlgebra L = sl2();
  Element x{Scalar(1), Scalar(-1), Scalar(2)}, y{Scalar(3), Scalar(0), Scalar(1)};
  Matrix ax = liecc::ad_matrix(L, x), ay = liecc::ad_matrix(L, y);
  CHECK(ax * ay - ay * ax == liecc::ad_matrix(L, L.bracket(x, y)));
  CHECK(liecc::is_derivation(L, ax));
}

TEST_CASE("center and series") {
  auto z = liecc::center(heisenberg());
  REQUIRE(z.size() == 1);
  CHECK(z[0] == Element{Scalar(0), Scalar(0), Scalar(1)});
  CHECK(liecc::center(sl2()).empty());
  CHECK(liecc::derived_series(sl2()) == std::vector<std::size_t>{3});
  CHECK(liecc::lower_central_series(heisenberg()) == std::vector<std::size_t>{3, 1, 0});
  CHECK(liecc::is_nilpotent(heisenberg()));
  CHECK_FALSE(liecc::is_solvable(sl2()));
  LieAlgebra aff(2, {{0, 1, 1, Scalar(1)}});
  CHECK(liecc::is_solvable(aff));
  CHECK_FALSE(liecc::is_nilpotent(aff));
  CHECK(liecc::is_abelian(LieAlgebra::abelian(3)));
}

TEST_CASE("Killing criterion") {
  CHECK(liecc::is_semisimple(sl2()));
  CHECK_FALSE(liecc::is_semisimple(heisenberg()));
  // trace(ad_h ad_h) = 2 for h = e1 in this basis.
  CHECK(liecc::killing_form(sl2())(0, 0) == Scalar(2));
}

TEST_CASE("summed center matrix of s_{4,12}") {
  LieAlgebra A(4, {{0, 2, 0, Scalar(1)}, {0, 3, 1, Scalar(-1)}, {1, 2, 1, Scalar(1)}, {1, 3, 0, Scalar(1)}});
  CHECK(liecc::determinant(liecc::center_summed_matrix(A)) == Scalar(4));
  CHECK(liecc::center(A).empty());
}

TEST_CASE("direct sums and semidirect products") {
  LieAlgebra S = liecc::direct_sum(sl2(), heisenberg());
  CHECK(S.dim() == 6);
  CHECK(S.constant(3, 4, 5) == Scalar(1));
  CHECK(S.constant(0, 3, 3).is_zero());
  CHECK_THROWS_AS(liecc::direct_sum(sl2(), sl2().with_field(Field::complex)), liecc::InputError);

  Matrix D{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(2)}};
  LieAlgebra T = liecc::semidirect_1dim(LieAlgebra::abelian(2), D);
  CHECK(T.basis_names().back() == "e0");
  // [e0, e2] = 2 e2 with e0 stored last.
  CHECK(T.constant(2, 1, 1) == Scalar(2));

  Matrix not_der{{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(0)}};
  CHECK_THROWS_AS(liecc::semidirect_1dim(heisenberg(), not_der), liecc::InputError);
}

TEST_CASE("basis changes round-trip and preserve Jacobi") {
  std::mt19937 rng(301);
  LieAlgebra L = liecc::direct_sum(sl2(), LieAlgebra(2, {{0, 1, 1, Scalar(1)}}));
  for (int trial = 0; trial < 20; ++trial) {
    Matrix P = oracle::random_invertible(rng, 5, -2, 2);
    LieAlgebra M = liecc::change_basis(L, P);
    CHECK(liecc::change_basis(M, liecc::inverse(P)) == L);
    CHECK(liecc::is_semisimple(M) == liecc::is_semisimple(L));
  }
  CHECK(liecc::change_basis(L, Matrix::identity(5)) == L);
  CHECK_THROWS_AS(liecc::change_basis(L, Matrix(5, 5)), liecc::InputError);
}
