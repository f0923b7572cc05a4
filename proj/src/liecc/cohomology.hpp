#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liecc/lie_algebra.hpp"
#include "liecc/matrix.hpp"

namespace liecc {

/// Strictly increasing index tuple; indexes the wedge monomial
/// e_{s0}^* ^ ... ^ e_{s(p-1)}^*.
using Subset = std::vector<std::size_t>;

/// All p-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> subsets(std::size_t n, std::size_t p);

/// Chevalley-Eilenberg complex with trivial coefficients. d[p] maps
/// Lambda^p to Lambda^{p+1} and has shape C(n, p+1) x C(n, p); coordinates
/// are taken in the lexicographic wedge basis. Sign convention:
/// (d e_k^*)(e_i, e_j) = -c_ij^k, higher degrees by the alternating sum
///   (dw)(x_0..x_p) = sum_{a<b} (-1)^{a+b} w([x_a, x_b], x_0..^a..^b..x_p).
struct CochainComplex {
  std::size_t n = 0;
  std::vector<std::vector<Subset>> bases;  // bases[p], p = 0..max_degree+1
  std::vector<Matrix> d;                   // d[p], p = 0..max_degree
};

/// Builds d^0..d^max_degree (clamped to n).
CochainComplex build_complex(const LieAlgebra& L, std::size_t max_degree);
inline CochainComplex build_complex(const LieAlgebra& L) { return build_complex(L, L.dim()); }

struct CohomologyReport {
  std::vector<std::size_t> cochain_dims;  // C(n, p)
  std::vector<std::size_t> cocycle_dims;  // dim Z^p
  std::vector<std::size_t> coboundary_dims;  // dim B^p
  std::vector<std::size_t> betti;  // b_p = dim Z^p - dim B^p
};

/// Ranks of the coboundaries give Z^p, B^p, H^p for p = 0..max_degree.
CohomologyReport cohomology_report(const LieAlgebra& L, std::size_t max_degree);
inline CohomologyReport cohomology_report(const LieAlgebra& L) { return cohomology_report(L, L.dim()); }

struct CohomologyBasis {
  std::size_t degree = 0;
  std::vector<Subset> monomials;       // wedge basis of Lambda^p
  std::vector<Vector> cocycles;        // basis of Z^p
  std::vector<Vector> coboundaries;    // basis of B^p
  std::vector<Vector> representatives; // cocycles completing B^p to Z^p
};

/// Explicit bases of Z^p, B^p and a complement representing H^p. Throws
/// InputError when p > n.
CohomologyBasis cohomology_basis(const LieAlgebra& L, std::size_t p);

struct CocompletenessReport {
  bool cocomplete = false;
  std::size_t dim_z2 = 0;
  std::size_t dim_b2 = 0;
  std::size_t b2 = 0;
  bool coboundaries_closed = false;  // B^2 inside Z^2, i.e. d^2 d^1 = 0
  std::vector<std::size_t> betti;    // full b_0..b_n
};

/// Cocomplete iff H^2(L, K) = 0.
CocompletenessReport is_cocomplete(const LieAlgebra& L);

/// b2(L1) + b1(L1) b1(L2) + b2(L2).
std::size_t kunneth_b2(const LieAlgebra& L1, const LieAlgebra& L2);

/// "2 e1*∧e4* - e2*∧e3*" using the algebra's basis names.
std::string format_form(const LieAlgebra& L, const std::vector<Subset>& monomials, const Vector& coords);

}  // namespace liecc
