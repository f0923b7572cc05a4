#pragma once

#include <optional>
#include <vector>

#include "liecc/lie_algebra.hpp"
#include "liecc/matrix.hpp"

namespace liecc {

/// Der(L) as an explicit basis, together with dim ad(L).
struct DerivationSpace {
  std::size_t dim_der = 0;
  std::size_t dim_ad = 0;
  std::vector<Matrix> basis;
};

/// Solves D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j] (i < j) for the n^2
/// entries of D and returns an exact kernel basis.
DerivationSpace derivation_space(const LieAlgebra& L);

/// Some a with ad_a = D, or nullopt when D is outer. Unique when the
/// center is trivial. Throws InputError when D is not a derivation.
std::optional<Element> is_inner(const LieAlgebra& L, const Matrix& D);

struct CompletenessReport {
  bool complete = false;
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::size_t dim_der = 0;
  std::size_t dim_ad = 0;
  /// det of center_summed_matrix(L); diagnostic only.
  Scalar summed_center_det;
};

/// Complete iff Z(L) = 0 and dim Der(L) = n.
CompletenessReport is_complete(const LieAlgebra& L);

}  // namespace liecc
