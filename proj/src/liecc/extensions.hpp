#pragma once

#include <optional>
#include <vector>

#include "liecc/cohomology.hpp"
#include "liecc/lie_algebra.hpp"
#include "liecc/matrix.hpp"

namespace liecc {

/// Closed 2-form on a base algebra, coordinates in the lexicographic
/// basis e_i^* ^ e_j^* (i < j).
class TwoCocycle {
 public:
  /// Throws InputError when the length is wrong or d(omega) != 0.
  TwoCocycle(LieAlgebra base, Vector coords);
  /// From (i, j, value) triples, 0-based with i < j.
  static TwoCocycle from_values(LieAlgebra base, const std::vector<BracketTerm>& values);

  const LieAlgebra& base() const { return base_; }
  const Vector& coords() const { return coords_; }
  /// omega(e_i, e_j), antisymmetric.
  Scalar value(std::size_t i, std::size_t j) const;

 private:
  LieAlgebra base_;
  Vector coords_;
};

/// C + K z with [x, y] = [x, y]_C + omega(x, y) z; z is appended last and
/// named "z".
LieAlgebra central_extension(const TwoCocycle& omega);

struct ExtensionWitness {
  enum class Kind { left_inverse, split_basis_change, inner_element };
  Kind kind = Kind::split_basis_change;
  /// Columns are the new basis vectors in the old coordinates.
  Matrix basis_change;
  /// theta for a central split, a for a cocentral split, the functional
  /// r: B -> K for a left inverse.
  Vector element;
};

const char* to_string(ExtensionWitness::Kind k);

/// Solves d(theta) = omega. On success the witness basis is
/// f_i = e_i - theta(e_i) z, f_z = z, in which the extension's table is
/// that of C + K.
std::optional<ExtensionWitness> central_split_witness(const TwoCocycle& omega);

/// The functional r = theta + z^* on C + K z; r kills every bracket and
/// r(z) = 1, so it is a left inverse of the inclusion of K z.
std::optional<ExtensionWitness> central_left_inverse(const TwoCocycle& omega);

/// r is a Lie homomorphism B -> K (vanishes on [B, B]) with r(e_k) = 1.
bool verify_left_inverse(const LieAlgebra& B, const Vector& r, std::size_t kernel_index);

/// For A + K e0 with [e0, x] = D x: when D = ad_a the basis e0 -> e0 - a
/// splits the extension. Throws InputError when D is not a derivation.
std::optional<ExtensionWitness> cocentral_split_witness(const LieAlgebra& A, const Matrix& D);

/// Applies the witness basis change to B and compares the bracket table
/// with target's. Throws InputError on a dimension mismatch or a singular
/// basis change.
bool verify_witness(const LieAlgebra& B, const ExtensionWitness& w, const LieAlgebra& target);

}  // namespace liecc
