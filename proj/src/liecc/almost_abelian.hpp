#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecc/lie_algebra.hpp"
#include "liecc/matrix.hpp"
#include "liecc/polynomial.hpp"

namespace liecc {

/// K^n + K e0 with [e0, v] = D v; basis order (e1..en, e0).
struct AlmostAbelian {
  std::size_t n = 0;
  Matrix D;
  LieAlgebra algebra;
};

/// Throws InputError when D is not square or is zero (the algebra would be
/// abelian).
AlmostAbelian make_almost_abelian(const Matrix& D, Field field = Field::real);

struct EigenvalueReport {
  bool cocomplete = false;
  bool invertible = false;
  /// Two eigenvalues (distinct positions, over the algebraic closure) sum
  /// to zero.
  bool eigen_pair_obstruction = false;
  Polynomial char_poly;
  /// gcd(q(x), q(-x)) with q the characteristic polynomial stripped of
  /// its x-power factor.
  Polynomial pair_gcd;
};

/// Cocompleteness of K^n + K e0 from D alone: D invertible and no
/// eigenvalue pair summing to zero, decided by polynomial gcd.
EigenvalueReport eigenvalue_cocomplete(const Matrix& D);

/// Matrix of w -> D^T.w on Lambda^2((K^n)^*) in the lexicographic wedge
/// basis, where (D^T.w)(u, v) = w(Du, v) + w(u, Dv).
Matrix wedge2_action(const Matrix& D);

/// dim ker(wedge2_action(D)) + (n - rank D), i.e. b2 of K^n + K e0.
std::size_t h2_via_wedge_action(const Matrix& D);

struct ProportionalSimilarity {
  Scalar alpha;
  std::vector<Polynomial> invariants_first;   // of D1
  std::vector<Polynomial> invariants_scaled;  // of alpha * D2
};

/// Finds alpha != 0 with alpha * D2 similar to D1 (so D1 = P^-1 (alpha D2) P
/// for some invertible P), or nullopt. Candidates come from the
/// characteristic-polynomial relation c1_k = alpha^(n-k) c2_k; similarity is
/// then decided by comparing invariant factors. Throws InputError on a size
/// mismatch.
std::optional<ProportionalSimilarity> proportionally_similar(const Matrix& D1, const Matrix& D2, Field field);

struct ClassifiedInstance {
  std::string label;     // e.g. "C_{3.1}^{2}"
  std::string parameter; // empty for parameter-free families
  Matrix D;
  bool cocomplete = false;
};

struct Identification {
  std::string first;
  std::string second;
  Scalar alpha;
};

struct ClassifiedFamily {
  std::string name;         // "C_{3.1}", "C_{3.2}", "R_{3.3}"
  std::string brackets;     // bracket template in basis (e0, e1, e2)
  std::string constraint;   // parameter exclusions
  std::string representative;
  std::vector<ClassifiedInstance> samples;   // cocomplete samples
  std::vector<ClassifiedInstance> rejected;  // excluded parameters, eigenvalue test false
  std::vector<Identification> identifications;
};

struct Classification3 {
  Field field = Field::real;
  std::vector<ClassifiedFamily> families;
  std::vector<std::string> sample_grid;
  /// Cross-family proportional similarities among samples; empty when the
  /// families are distinct.
  std::vector<Identification> cross_family;
  /// Complex mode only: R_{3.3} samples absorbed by C_{3.1} with a
  /// Gaussian scaling.
  std::vector<Identification> absorbed;
};

/// Cocomplete 3-dimensional almost abelian families (n = 2), sampled over a
/// fixed rational grid and deduplicated by proportional similarity.
Classification3 classify_dim3(Field field);

}  // namespace liecc
