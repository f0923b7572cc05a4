#include "liecc/extensions.hpp"

#include <utility>

#include "liecc/derivations.hpp"
#include "liecc/errors.hpp"

namespace liecc {

namespace {

std::size_t pair_slot(std::size_t n, std::size_t i, std::size_t j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }

}  // namespace

TwoCocycle::TwoCocycle(LieAlgebra base, Vector coords) : base_(std::move(base)), coords_(std::move(coords)) {
  const std::size_t n = base_.dim();
  if (coords_.size() != n * (n - (n ? 1 : 0)) / 2)
    throw InputError("TwoCocycle: expected " + std::to_string(n * (n ? n - 1 : 0) / 2) + " coordinates, got " +
                     std::to_string(coords_.size()));
  for (const auto& c : coords_)
    if (base_.field() == Field::real && !c.is_real()) throw InputError("TwoCocycle: Gaussian value on a real algebra");
  if (n < 3) return;
  CochainComplex cx = build_complex(base_, 2);
  if (!is_zero(cx.d[2] * coords_)) throw InputError("TwoCocycle: form is not closed");
}

TwoCocycle TwoCocycle::from_values(LieAlgebra base, const std::vector<BracketTerm>& values) {
  const std::size_t n = base.dim();
  Vector coords(n < 2 ? 0 : n * (n - 1) / 2);
  for (const auto& v : values) {
    if (v.i >= v.j || v.j >= n) throw InputError("TwoCocycle: need 0 <= i < j < dim");
    coords[pair_slot(n, v.i, v.j)] += v.coeff;
  }
  return TwoCocycle(std::move(base), std::move(coords));
}

Scalar TwoCocycle::value(std::size_t i, std::size_t j) const {
  if (i == j) return Scalar(0);
  if (i > j) return -value(j, i);
  return coords_[pair_slot(base_.dim(), i, j)];
}

LieAlgebra central_extension(const TwoCocycle& omega) {
  const LieAlgebra& C = omega.base();
  const std::size_t n = C.dim();
  std::vector<BracketTerm> terms = C.terms();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar w = omega.value(i, j);
      if (!w.is_zero()) terms.push_back({i, j, n, w});
    }
  std::vector<std::string> names = C.basis_names();
  names.push_back("z");
  return LieAlgebra(n + 1, terms, C.field(), std::move(names));
}

const char* to_string(ExtensionWitness::Kind k) {
  switch (k) {
    case ExtensionWitness::Kind::left_inverse: return "left_inverse";
    case ExtensionWitness::Kind::split_basis_change: return "split_basis_change";
    case ExtensionWitness::Kind::inner_element: return "inner_element";
  }
  return "?";
}

namespace {

std::optional<Vector> primitive(const TwoCocycle& omega) {
  const LieAlgebra& C = omega.base();
  const std::size_t n = C.dim();
  if (n < 2) return Vector(n);
  CochainComplex cx = build_complex(C, 1);
  return solve(cx.d[1], omega.coords());
}

}  // namespace

std::optional<ExtensionWitness> central_split_witness(const TwoCocycle& omega) {
  auto theta = primitive(omega);
  if (!theta) return std::nullopt;
  const std::size_t n = omega.base().dim();
  ExtensionWitness w;
  w.kind = ExtensionWitness::Kind::split_basis_change;
  w.basis_change = Matrix::identity(n + 1);
  for (std::size_t i = 0; i < n; ++i) w.basis_change(n, i) = -(*theta)[i];
  w.element = std::move(*theta);
  return w;
}

std::optional<ExtensionWitness> central_left_inverse(const TwoCocycle& omega) {
  auto theta = primitive(omega);
  if (!theta) return std::nullopt;
  ExtensionWitness w;
  w.kind = ExtensionWitness::Kind::left_inverse;
  w.element = std::move(*theta);
  w.element.push_back(Scalar(1));
  return w;
}

bool verify_left_inverse(const LieAlgebra& B, const Vector& r, std::size_t kernel_index) {
  if (r.size() != B.dim() || kernel_index >= B.dim()) throw InputError("verify_left_inverse: dimension mismatch");
  if (!r[kernel_index].is_one()) return false;
  for (std::size_t i = 0; i < B.dim(); ++i)
    for (std::size_t j = i + 1; j < B.dim(); ++j) {
      Element b = B.bracket_basis(i, j);
      Scalar s;
      for (std::size_t k = 0; k < b.size(); ++k) s += r[k] * b[k];
      if (!s.is_zero()) return false;
    }
  return true;
}

std::optional<ExtensionWitness> cocentral_split_witness(const LieAlgebra& A, const Matrix& D) {
  auto a = is_inner(A, D);
  if (!a) return std::nullopt;
  const std::size_t n = A.dim();
  ExtensionWitness w;
  w.kind = ExtensionWitness::Kind::inner_element;
  w.basis_change = Matrix::identity(n + 1);
  for (std::size_t i = 0; i < n; ++i) w.basis_change(i, n) = -(*a)[i];
  w.element = std::move(*a);
  return w;
}

bool verify_witness(const LieAlgebra& B, const ExtensionWitness& w, const LieAlgebra& target) {
  if (w.basis_change.rows() != B.dim() || B.dim() != target.dim())
    throw InputError("verify_witness: dimension mismatch");
  return change_basis(B, w.basis_change) == target.with_field(B.field());
}

}  // namespace liecc
