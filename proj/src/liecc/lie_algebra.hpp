#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liecc/matrix.hpp"
#include "liecc/scalar.hpp"

namespace liecc {

/// Coordinates of an element in the algebra's basis.
using Element = Vector;

/// One structure constant c_{ij}^k with 0-based indices and i < j.
struct BracketTerm {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar coeff;
};

/// Finite-dimensional Lie algebra given by structure constants on a basis
/// e_1..e_n. Only the brackets [e_i, e_j] with i < j are stored; the rest
/// follow from antisymmetry. Construction validates the Jacobi identity, so
/// every instance is a genuine Lie algebra.
class LieAlgebra {
 public:
  /// The zero-dimensional algebra.
  LieAlgebra() = default;

  /// Terms with the same (i, j, k) accumulate. Throws InputError on index
  /// errors, on non-real coefficients in a real algebra, and on a Jacobi
  /// failure (the message names the offending basis triple, 1-based).
  LieAlgebra(std::size_t dim, const std::vector<BracketTerm>& terms, Field field = Field::real,
             std::vector<std::string> basis_names = {});

  static LieAlgebra abelian(std::size_t dim, Field field = Field::real);

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// c_{ij}^k for any i, j (antisymmetric; zero when i == j).
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// Coordinates of [e_i, e_j].
  Element bracket_basis(std::size_t i, std::size_t j) const;
  /// Nonzero structure constants with i < j, ordered by (i, j, k).
  std::vector<BracketTerm> terms() const;

  Element bracket(const Element& x, const Element& y) const;
  Element basis_element(std::size_t i) const;

  /// Same constants, different ground field. Throws InputError when moving
  /// Gaussian coefficients to the real field.
  LieAlgebra with_field(Field field) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.table_ == b.table_;
  }

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  void validate_jacobi() const;

  std::size_t dim_ = 0;
  Field field_ = Field::real;
  std::vector<std::string> names_;
  // table_[pair_index(i, j)] = coordinates of [e_i, e_j], i < j.
  std::vector<Element> table_;
};

/// Matrix of ad_x: column j holds the coordinates of [x, e_j].
Matrix ad_matrix(const LieAlgebra& L, const Element& x);

/// Basis of the center, as the kernel of x -> ([x, e_1], ..., [x, e_n]).
std::vector<Element> center(const LieAlgebra& L);

/// The matrix (sum_k c_{ji}^k)_{ij}. Its nonvanishing determinant is only a
/// heuristic for a trivial center (the k-sum may cancel); `center` is the
/// exact test. Exposed for diagnostics.
Matrix center_summed_matrix(const LieAlgebra& L);

/// Basis of [L, L].
std::vector<Element> derived_subalgebra(const LieAlgebra& L);
/// Basis of [U, V] for subspaces given by spanning vectors.
std::vector<Element> bracket_span(const LieAlgebra& L, std::span<const Element> U, std::span<const Element> V);
/// Dimensions L^(0) = L, L^(1) = [L, L], ... until the sequence stabilizes.
std::vector<std::size_t> derived_series(const LieAlgebra& L);
/// Dimensions L_1 = L, L_2 = [L, L_1], ... until the sequence stabilizes.
std::vector<std::size_t> lower_central_series(const LieAlgebra& L);

bool is_abelian(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

/// Gram matrix of trace(ad_x ad_y) on the basis.
Matrix killing_form(const LieAlgebra& L);
/// Cartan criterion: the Killing form is nondegenerate.
bool is_semisimple(const LieAlgebra& L);

/// Block structure constants, no cross brackets. Basis e_1..e_{n1+n2}.
/// Throws InputError when the fields differ.
LieAlgebra direct_sum(const LieAlgebra& L1, const LieAlgebra& L2);

/// True when D([e_i, e_j]) = [D e_i, e_j] + [e_i, D e_j] for all i < j.
bool is_derivation(const LieAlgebra& L, const Matrix& D);

/// L + K e0 with [e0, e_i] = D(e_i), i.e. sum_k D(k, i) e_k; e0 is appended
/// as the last basis vector. Throws InputError when D is not a derivation
/// (naming the first failing pair) or has the wrong shape.
LieAlgebra semidirect_1dim(const LieAlgebra& L, const Matrix& D);

/// Structure constants in the basis f_j = sum_i P(i, j) e_i. Throws
/// InputError when P is singular or has the wrong shape.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P);

}  // namespace liecc
