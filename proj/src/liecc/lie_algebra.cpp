#include "liecc/lie_algebra.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "liecc/errors.hpp"

namespace liecc {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<BracketTerm>& terms, Field field,
                       std::vector<std::string> basis_names)
    : dim_(dim), field_(field), names_(std::move(basis_names)) {
  if (names_.empty()) names_ = default_names(dim);
  if (names_.size() != dim) throw InputError("LieAlgebra: expected " + std::to_string(dim) + " basis names");
  table_.assign(dim * (dim > 0 ? dim - 1 : 0) / 2, Element(dim));
  for (const auto& t : terms) {
    if (t.i >= t.j || t.j >= dim || t.k >= dim) {
      std::ostringstream os;
      os << "LieAlgebra: bracket index out of range (i=" << t.i + 1 << ", j=" << t.j + 1 << ", k=" << t.k + 1
         << "); need 1 <= i < j <= " << dim << " and 1 <= k <= " << dim;
      throw InputError(os.str());
    }
    if (field == Field::real && !t.coeff.is_real())
      throw InputError("LieAlgebra: Gaussian coefficient " + t.coeff.to_string() + " in a real algebra");
    table_[pair_index(t.i, t.j)][t.k] += t.coeff;
  }
  validate_jacobi();
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, Field field) { return LieAlgebra(dim, {}, field); }

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // Lexicographic position of (i, j), i < j, among all pairs.
  return i * (2 * dim_ - i - 1) / 2 + (j - i - 1);
}

Scalar LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Scalar(0);
  if (i < j) return table_[pair_index(i, j)][k];
  return -table_[pair_index(j, i)][k];
}

Element LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return Element(dim_);
  if (i < j) return table_[pair_index(i, j)];
  Element e = table_[pair_index(j, i)];
  for (auto& x : e) x = -x;
  return e;
}

std::vector<BracketTerm> LieAlgebra::terms() const {
  std::vector<BracketTerm> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Element& e = table_[pair_index(i, j)];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!e[k].is_zero()) out.push_back({i, j, k, e[k]});
    }
  return out;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InputError("bracket: element dimension mismatch");
  Element out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      const Element& e = table_[pair_index(std::min(i, j), std::max(i, j))];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (e[k].is_zero()) continue;
        if (i < j)
          out[k] += f * e[k];
        else
          out[k] -= f * e[k];
      }
    }
  }
  return out;
}

Element LieAlgebra::basis_element(std::size_t i) const {
  Element e(dim_);
  e.at(i) = 1;
  return e;
}

LieAlgebra LieAlgebra::with_field(Field field) const {
  return LieAlgebra(dim_, terms(), field, names_);
}

void LieAlgebra::validate_jacobi() const {
  // [x, e_l] for x given in coordinates.
  auto bracket_with = [&](const Element& x, std::size_t l) {
    Element out(dim_);
    for (std::size_t m = 0; m < dim_; ++m) {
      if (x[m].is_zero() || m == l) continue;
      Element b = bracket_basis(m, l);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!b[k].is_zero()) out[k] += x[m] * b[k];
    }
    return out;
  };
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t l = j + 1; l < dim_; ++l) {
        Element jac = bracket_with(bracket_basis(i, j), l);
        jac = add(jac, bracket_with(bracket_basis(j, l), i));
        jac = add(jac, bracket_with(bracket_basis(l, i), j));
        if (!is_zero(jac)) {
          std::ostringstream os;
          os << "Jacobi identity fails on (" << names_[i] << ", " << names_[j] << ", " << names_[l]
             << ") = (" << i + 1 << ", " << j + 1 << ", " << l + 1 << ")";
          throw InputError(os.str());
        }
      }
}

Matrix ad_matrix(const LieAlgebra& L, const Element& x) {
  const std::size_t n = L.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Element col = L.bracket(x, L.basis_element(j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

std::vector<Element> center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Row (j, k): coefficient of e_k in [x, e_j] = sum_i x_i c_{ij}^k.
  Matrix sys(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) sys(j * n + k, i) = L.constant(i, j, k);
  return kernel_basis(sys);
}

Matrix center_summed_matrix(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(i, j) += L.constant(j, i, k);
  return m;
}

std::vector<Element> bracket_span(const LieAlgebra& L, std::span<const Element> U, std::span<const Element> V) {
  std::vector<Element> products;
  for (const auto& u : U)
    for (const auto& v : V) {
      Element b = L.bracket(u, v);
      if (!is_zero(b)) products.push_back(std::move(b));
    }
  return span_basis(products, L.dim());
}

std::vector<Element> derived_subalgebra(const LieAlgebra& L) {
  std::vector<Element> products;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Element b = L.bracket_basis(i, j);
      if (!is_zero(b)) products.push_back(std::move(b));
    }
  return span_basis(products, L.dim());
}

namespace {

std::vector<Element> full_basis(const LieAlgebra& L) {
  std::vector<Element> b;
  for (std::size_t i = 0; i < L.dim(); ++i) b.push_back(L.basis_element(i));
  return b;
}

}  // namespace

std::vector<std::size_t> derived_series(const LieAlgebra& L) {
  std::vector<Element> cur = full_basis(L);
  std::vector<std::size_t> dims{cur.size()};
  for (;;) {
    std::vector<Element> next = bracket_span(L, cur, cur);
    if (next.size() == cur.size()) break;
    dims.push_back(next.size());
    if (next.empty()) break;
    cur = std::move(next);
  }
  return dims;
}

std::vector<std::size_t> lower_central_series(const LieAlgebra& L) {
  const std::vector<Element> all = full_basis(L);
  std::vector<Element> cur = all;
  std::vector<std::size_t> dims{cur.size()};
  for (;;) {
    std::vector<Element> next = bracket_span(L, all, cur);
    if (next.size() == cur.size()) break;
    dims.push_back(next.size());
    if (next.empty()) break;
    cur = std::move(next);
  }
  return dims;
}

bool is_abelian(const LieAlgebra& L) { return L.terms().empty(); }
bool is_solvable(const LieAlgebra& L) { return derived_series(L).back() == 0; }
bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back() == 0; }

Matrix killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(L, L.basis_element(i)));
  Matrix B(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      B(i, j) = (ads[i] * ads[j]).trace();
      B(j, i) = B(i, j);
    }
  return B;
}

bool is_semisimple(const LieAlgebra& L) { return !determinant(killing_form(L)).is_zero(); }

LieAlgebra direct_sum(const LieAlgebra& L1, const LieAlgebra& L2) {
  if (L1.field() != L2.field()) throw InputError("direct_sum: algebras over different fields");
  const std::size_t n1 = L1.dim();
  std::vector<BracketTerm> terms = L1.terms();
  for (auto t : L2.terms()) {
    t.i += n1;
    t.j += n1;
    t.k += n1;
    terms.push_back(std::move(t));
  }
  return LieAlgebra(n1 + L2.dim(), terms, L1.field());
}

namespace {

/// First pair (i, j), i < j, where the Leibniz rule fails.
std::optional<std::pair<std::size_t, std::size_t>> leibniz_failure(const LieAlgebra& L, const Matrix& D) {
  const std::size_t n = L.dim();
  std::vector<Element> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(D.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Element lhs = D * L.bracket_basis(i, j);
      Element rhs = add(L.bracket(images[i], L.basis_element(j)), L.bracket(L.basis_element(i), images[j]));
      if (lhs != rhs) return std::make_pair(i, j);
    }
  return std::nullopt;
}

}  // namespace

bool is_derivation(const LieAlgebra& L, const Matrix& D) {
  if (D.rows() != L.dim() || D.cols() != L.dim()) return false;
  return !leibniz_failure(L, D).has_value();
}

LieAlgebra semidirect_1dim(const LieAlgebra& L, const Matrix& D) {
  const std::size_t n = L.dim();
  if (D.rows() != n || D.cols() != n)
    throw InputError("semidirect_1dim: derivation must be " + std::to_string(n) + "x" + std::to_string(n));
  if (L.field() == Field::real && !D.is_real())
    throw InputError("semidirect_1dim: Gaussian entries in a real algebra");
  if (auto bad = leibniz_failure(L, D)) {
    std::ostringstream os;
    os << "semidirect_1dim: matrix is not a derivation; Leibniz rule fails on (" << L.basis_names()[bad->first]
       << ", " << L.basis_names()[bad->second] << ")";
    throw InputError(os.str());
  }
  std::vector<BracketTerm> terms = L.terms();
  // [e_i, e0] = -D(e_i), with e0 at index n.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!D(k, i).is_zero()) terms.push_back({i, n, k, -D(k, i)});
  std::vector<std::string> names = L.basis_names();
  bool taken = std::find(names.begin(), names.end(), "e0") != names.end();
  names.push_back(taken ? "e" + std::to_string(n + 1) : "e0");
  return LieAlgebra(n + 1, terms, L.field(), std::move(names));
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P) {
  const std::size_t n = L.dim();
  if (P.rows() != n || P.cols() != n) throw InputError("change_basis: matrix has the wrong shape");
  if (determinant(P).is_zero()) throw InputError("change_basis: basis change is singular");
  Matrix Pinv = inverse(P);
  std::vector<Element> f;
  f.reserve(n);
  for (std::size_t a = 0; a < n; ++a) f.push_back(P.column(a));
  std::vector<BracketTerm> terms;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Element coords = Pinv * L.bracket(f[a], f[b]);
      for (std::size_t k = 0; k < n; ++k)
        if (!coords[k].is_zero()) terms.push_back({a, b, k, coords[k]});
    }
  return LieAlgebra(n, terms, L.field());
}

}  // namespace liecc
