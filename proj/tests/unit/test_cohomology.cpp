#include <doctest.h>

#include <random>

#include "liecc/cohomology.hpp"
#include "liecc/errors.hpp"
#include "oracles.hpp"

using liecc::LieAlgebra;
using liecc::Matrix;
using liecc::Scalar;

namespace {

LieAlgebra heisenberg() { return LieAlgebra(3, {{0, 1, 2, Scalar(1)}}); }
LieAlgebra sl2() { return LieAlgebra(3, {{0, 1, 1, Scalar(1)}, {0, 2, 2, Scalar(-1)}, {1, 2, 0, Scalar(1)}}); }
LieAlgebra s410() {
  return LieAlgebra(4, {{0, 3, 0, Scalar(2)}, {1, 3, 1, Scalar(1)}, {2, 3, 1, Scalar(1)}, {2, 3, 2, Scalar(1)}});
}

// Semidirect products of an abelian ideal with a random matrix, optionally
// scrambled by a random basis change.
LieAlgebra random_almost_abelian(std::mt19937& rng, std::size_t n) {
  Matrix D = oracle::random_matrix(rng, n, n, -2, 2);
  LieAlgebra L = liecc::semidirect_1dim(LieAlgebra::abelian(n), D);
  return liecc::change_basis(L, oracle::random_invertible(rng, n + 1, -1, 1));
}

}  // namespace

TEST_CASE("wedge bases are lexicographic") {
  auto s = liecc::subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == liecc::Subset{0, 1});
  CHECK(s[2] == liecc::Subset{0, 3});
  CHECK(s.back() == liecc::Subset{2, 3});
  CHECK(liecc::subsets(3, 0).size() == 1);
  CHECK(liecc::subsets(3, 4).empty());
}

TEST_CASE("sign convention of the first coboundary") {
  // (d e_k^*)(e_i, e_j) = -c_ij^k: on s_{4,10}, d e1^* = -2 e1^* ^ e4^*.
  LieAlgebra C = s410();
  auto cx = liecc::build_complex(C, 1);
  liecc::Vector e1star{Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  CHECK(liecc::format_form(C, cx.bases[2], cx.d[1] * e1star) == "-2 e1*∧e4*");
}

TEST_CASE("Heisenberg and sl2 Betti numbers against full tensor cochains") {
  CHECK(oracle::tensor_betti(heisenberg()) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(liecc::cohomology_report(heisenberg()).betti == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(oracle::tensor_betti(sl2()) == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK(liecc::cohomology_report(sl2()).betti == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK(liecc::cohomology_report(LieAlgebra::abelian(2)).betti == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("Betti numbers agree with the tensor oracle on random algebras") {
  std::mt19937 rng(501);
  for (int trial = 0; trial < 25; ++trial) {
    LieAlgebra L = random_almost_abelian(rng, 2 + trial % 3);
    CHECK(liecc::cohomology_report(L).betti == oracle::tensor_betti(L));
  }
}

TEST_CASE("d composed with d vanishes and the Euler characteristic is zero") {
  std::mt19937 rng(502);
  for (int trial = 0; trial < 25; ++trial) {
    LieAlgebra L = random_almost_abelian(rng, 2 + trial % 4);
    auto cx = liecc::build_complex(L);
    for (std::size_t p = 0; p + 1 < cx.d.size(); ++p) CHECK((cx.d[p + 1] * cx.d[p]).is_zero());
    long chi = 0;
    auto betti = liecc::cohomology_report(L).betti;
    for (std::size_t p = 0; p < betti.size(); ++p) chi += (p % 2 ? -1L : 1L) * static_cast<long>(betti[p]);
    CHECK(chi == 0);
  }
}

TEST_CASE("s_{4,10} is cocomplete with Z2 = B2 of dimension 3") {
  auto rep = liecc::is_cocomplete(s410());
  CHECK(rep.dim_z2 == 3);
  CHECK(rep.dim_b2 == 3);
  CHECK(rep.b2 == 0);
  CHECK(rep.coboundaries_closed);
  CHECK(rep.cocomplete);
  CHECK_FALSE(liecc::is_cocomplete(heisenberg()).cocomplete);
  CHECK(liecc::is_cocomplete(heisenberg()).b2 == 2);
}

TEST_CASE("explicit cohomology bases") {
  LieAlgebra H = heisenberg();
  auto b = liecc::cohomology_basis(H, 2);
  CHECK(b.cocycles.size() == 3);
  CHECK(b.coboundaries.size() == 1);
  CHECK(b.representatives.size() == 2);
  auto cx = liecc::build_complex(H);
  for (const auto& z : b.cocycles) CHECK(liecc::is_zero(cx.d[2] * z));
  for (const auto& c : b.coboundaries) CHECK(liecc::in_span(b.cocycles, c, b.monomials.size()));
  std::vector<liecc::Vector> all = b.coboundaries;
  all.insert(all.end(), b.representatives.begin(), b.representatives.end());
  CHECK(liecc::rank(Matrix::from_rows(all, b.monomials.size())) == 3);
  CHECK_THROWS_AS(liecc::cohomology_basis(H, 4), liecc::InputError);
}

TEST_CASE("Kunneth for degree two") {
  LieAlgebra aff(2, {{0, 1, 1, Scalar(1)}});
  CHECK(liecc::kunneth_b2(aff, aff) == 1);
  CHECK(liecc::is_cocomplete(liecc::direct_sum(aff, aff)).b2 == 1);
  CHECK(liecc::kunneth_b2(heisenberg(), sl2()) == liecc::is_cocomplete(liecc::direct_sum(heisenberg(), sl2())).b2);
}

TEST_CASE("low dimensions") {
  CHECK(liecc::is_cocomplete(LieAlgebra::abelian(1)).cocomplete);
  CHECK(liecc::is_cocomplete(LieAlgebra::abelian(1)).betti == std::vector<std::size_t>{1, 1});
  CHECK(liecc::cohomology_report(LieAlgebra()).betti == std::vector<std::size_t>{1});
}
