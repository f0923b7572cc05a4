#include "liecc/derivations.hpp"

#include "liecc/errors.hpp"

namespace liecc {

DerivationSpace derivation_space(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Unknown D(a, b) sits in column a * n + b. One row per (pair i < j,
  // output coordinate m):
  //   sum_k c_ij^k D(m,k) - sum_k D(k,i) c_kj^m - sum_k D(k,j) c_ik^m = 0
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  Matrix sys(pairs * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m, ++row)
        for (std::size_t k = 0; k < n; ++k) {
          Scalar cij = L.constant(i, j, k);
          if (!cij.is_zero()) sys(row, m * n + k) += cij;
          Scalar ckj = L.constant(k, j, m);
          if (!ckj.is_zero()) sys(row, k * n + i) -= ckj;
          Scalar cik = L.constant(i, k, m);
          if (!cik.is_zero()) sys(row, k * n + j) -= cik;
        }

  DerivationSpace out;
  for (const auto& v : kernel_basis(sys)) {
    Matrix D(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) D(a, b) = v[a * n + b];
    out.basis.push_back(std::move(D));
  }
  out.dim_der = out.basis.size();
  out.dim_ad = n - center(L).size();
  return out;
}

std::optional<Element> is_inner(const LieAlgebra& L, const Matrix& D) {
  const std::size_t n = L.dim();
  if (!is_derivation(L, D)) throw InputError("is_inner: matrix is not a derivation of the algebra");
  // sum_i a_i ad_{e_i} = D, entrywise: n^2 equations in n unknowns.
  Matrix sys(n * n, n);
  Vector rhs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ad = ad_matrix(L, L.basis_element(i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sys(r * n + c, i) = ad(r, c);
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) rhs[r * n + c] = D(r, c);
  return solve(sys, rhs);
}

CompletenessReport is_complete(const LieAlgebra& L) {
  CompletenessReport rep;
  rep.dim = L.dim();
  rep.center_dim = center(L).size();
  rep.summed_center_det = determinant(center_summed_matrix(L));
  DerivationSpace der = derivation_space(L);
  rep.dim_der = der.dim_der;
  rep.dim_ad = der.dim_ad;
  rep.complete = rep.center_dim == 0 && rep.dim_der == L.dim();
  return rep;
}

}  // namespace liecc
