#include <doctest.h>

#include <random>

#include "liecc/cohomology.hpp"
#include "liecc/derivations.hpp"
#include "liecc/errors.hpp"
#include "liecc/extensions.hpp"
#include "oracles.hpp"

using liecc::LieAlgebra;
using liecc::Matrix;
using liecc::Scalar;
using liecc::TwoCocycle;
using liecc::Vector;

namespace {

LieAlgebra s410() {
  return LieAlgebra(4, {{0, 3, 0, Scalar(2)}, {1, 3, 1, Scalar(1)}, {2, 3, 1, Scalar(1)}, {2, 3, 2, Scalar(1)}});
}
LieAlgebra aff() { return LieAlgebra(2, {{0, 1, 1, Scalar(1)}}); }

LieAlgebra with_line(const LieAlgebra& L) { return liecc::direct_sum(L, LieAlgebra::abelian(1, L.field())); }

}  // namespace

TEST_CASE("central extension of the plane is Heisenberg") {
  auto omega = TwoCocycle::from_values(LieAlgebra::abelian(2), {{0, 1, 0, Scalar(1)}});
  LieAlgebra B = liecc::central_extension(omega);
  CHECK(B == LieAlgebra(3, {{0, 1, 2, Scalar(1)}}));
  CHECK(B.basis_names().back() == "z");
  CHECK_FALSE(liecc::central_split_witness(omega));
}

TEST_CASE("zero cocycle gives the direct sum and the zero primitive") {
  TwoCocycle zero(s410(), Vector(6));
  CHECK(liecc::central_extension(zero) == with_line(s410()));
  auto w = liecc::central_split_witness(zero);
  REQUIRE(w);
  CHECK(liecc::is_zero(w->element));
  CHECK(w->basis_change == Matrix::identity(5));
}

TEST_CASE("exact cocycle on s_{4,10} splits with theta = -1/2 e1*") {
  auto omega = TwoCocycle::from_values(s410(), {{0, 3, 0, Scalar(1)}});
  LieAlgebra B = liecc::central_extension(omega);
  CHECK(B.dim() == 5);
  auto w = liecc::central_split_witness(omega);
  REQUIRE(w);
  CHECK(w->element == Vector{Scalar(-1, 2), Scalar(0), Scalar(0), Scalar(0)});
  CHECK(liecc::verify_witness(B, *w, with_line(s410())));
  auto perturbed = *w;
  perturbed.basis_change(4, 1) = Scalar(1);
  CHECK_FALSE(liecc::verify_witness(B, perturbed, with_line(s410())));
  auto r = liecc::central_left_inverse(omega);
  REQUIRE(r);
  CHECK(liecc::verify_left_inverse(B, r->element, 4));
}

TEST_CASE("non-closed forms are rejected") {
  // On s_{3,1} with a = 2, d(e1^* ^ e2^*) = 3 e1^* ^ e2^* ^ e3^*. (On a
  // unimodular algebra such as sl2 every 2-form is closed.)
  LieAlgebra s31(3, {{0, 2, 0, Scalar(1)}, {1, 2, 1, Scalar(2)}});
  CHECK_THROWS_AS(TwoCocycle::from_values(s31, {{0, 1, 0, Scalar(1)}}), liecc::InputError);
  CHECK_NOTHROW(TwoCocycle::from_values(s31, {{0, 2, 0, Scalar(1)}}));
  CHECK_THROWS_AS(TwoCocycle(s31, Vector(2)), liecc::InputError);
}

TEST_CASE("split witness exists exactly for coboundaries") {
  std::mt19937 rng(701);
  LieAlgebra H(3, {{0, 1, 2, Scalar(1)}});
  for (const LieAlgebra& C : {s410(), H, with_line(aff()), liecc::direct_sum(aff(), aff())}) {
    auto basis = liecc::cohomology_basis(C, 2);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 15; ++trial) {
      Vector w(basis.monomials.size());
      for (const auto& z : basis.cocycles) w = liecc::add(w, liecc::scaled(z, Scalar(coef(rng))));
      TwoCocycle omega(C, w);
      auto witness = liecc::central_split_witness(omega);
      CHECK(witness.has_value() == liecc::in_span(basis.coboundaries, w, w.size()));
      if (witness) CHECK(liecc::verify_witness(liecc::central_extension(omega), *witness, with_line(C)));
    }
  }
}

TEST_CASE("cocentral splits follow inner derivations") {
  LieAlgebra A = aff();
  for (const auto& D : liecc::derivation_space(A).basis) {
    auto w = liecc::cocentral_split_witness(A, D);
    REQUIRE(w);
    CHECK(liecc::verify_witness(liecc::semidirect_1dim(A, D), *w, with_line(A)));
  }
  auto zero = liecc::cocentral_split_witness(A, Matrix(2, 2));
  REQUIRE(zero);
  CHECK(zero->basis_change == Matrix::identity(3));
  CHECK_FALSE(liecc::cocentral_split_witness(LieAlgebra::abelian(2), Matrix::identity(2)));
  CHECK_THROWS_AS(liecc::cocentral_split_witness(LieAlgebra(3, {{0, 1, 2, Scalar(1)}}), Matrix::identity(3)),
                  liecc::InputError);
}

TEST_CASE("verify_witness input checks") {
  liecc::ExtensionWitness w;
  w.basis_change = Matrix(3, 3);
  LieAlgebra B(3, {{0, 1, 2, Scalar(1)}});
  CHECK_THROWS_AS(liecc::verify_witness(B, w, B), liecc::InputError);
  w.basis_change = Matrix::identity(3);
  CHECK(liecc::verify_witness(B, w, B));
  CHECK_THROWS_AS(liecc::verify_witness(B, w, aff()), liecc::InputError);
}
