#include "liecc/cohomology.hpp"

#include <sstream>

#include "liecc/errors.hpp"

namespace liecc {

std::vector<Subset> subsets(std::size_t n, std::size_t p) {
  std::vector<Subset> out;
  if (p > n) return out;
  Subset s(p);
  for (std::size_t i = 0; i < p; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    // Advance to the next increasing tuple.
    std::size_t i = p;
    while (i > 0 && s[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < p; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

namespace {

std::size_t mask_of(const Subset& s) {
  std::size_t m = 0;
  for (auto i : s) m |= std::size_t{1} << i;
  return m;
}

Matrix coboundary(const LieAlgebra& L, const std::vector<Subset>& source, const std::vector<Subset>& target) {
  const std::size_t n = L.dim();
  std::vector<std::size_t> column_of(std::size_t{1} << n, 0);
  for (std::size_t c = 0; c < source.size(); ++c) column_of[mask_of(source[c])] = c;

  Matrix d(target.size(), source.size());
  for (std::size_t row = 0; row < target.size(); ++row) {
    const Subset& T = target[row];
    const std::size_t q = T.size();  // = p + 1
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = a + 1; b < q; ++b) {
        Element br = L.bracket_basis(T[a], T[b]);
        std::size_t rest_mask = mask_of(T) & ~(std::size_t{1} << T[a]) & ~(std::size_t{1} << T[b]);
        const bool odd = (a + b) % 2 == 1;
        for (std::size_t k = 0; k < n; ++k) {
          if (br[k].is_zero() || (rest_mask >> k & 1U)) continue;
          // w = e_S^* evaluated on (e_k, rest): sign of moving k into place.
          std::size_t pos = static_cast<std::size_t>(__builtin_popcountll(rest_mask & ((std::size_t{1} << k) - 1)));
          bool negative = odd != (pos % 2 == 1);
          std::size_t col = column_of[rest_mask | (std::size_t{1} << k)];
          if (negative)
            d(row, col) -= br[k];
          else
            d(row, col) += br[k];
        }
      }
  }
  return d;
}

}  // namespace

CochainComplex build_complex(const LieAlgebra& L, std::size_t max_degree) {
  const std::size_t n = L.dim();
  if (n >= 8 * sizeof(std::size_t) - 1) throw InputError("build_complex: dimension too large");
  max_degree = std::min(max_degree, n);
  CochainComplex cx;
  cx.n = n;
  for (std::size_t p = 0; p <= max_degree + 1; ++p) cx.bases.push_back(subsets(n, p));
  for (std::size_t p = 0; p <= max_degree; ++p) cx.d.push_back(coboundary(L, cx.bases[p], cx.bases[p + 1]));
  return cx;
}

CohomologyReport cohomology_report(const LieAlgebra& L, std::size_t max_degree) {
  CochainComplex cx = build_complex(L, max_degree);
  CohomologyReport rep;
  std::vector<std::size_t> ranks;
  for (const auto& d : cx.d) ranks.push_back(rank(d));
  for (std::size_t p = 0; p < cx.d.size(); ++p) {
    std::size_t cochains = cx.bases[p].size();
    std::size_t z = cochains - ranks[p];
    std::size_t b = p == 0 ? 0 : ranks[p - 1];
    if (b > z) throw InvariantError("cohomology_report: B^p larger than Z^p");
    rep.cochain_dims.push_back(cochains);
    rep.cocycle_dims.push_back(z);
    rep.coboundary_dims.push_back(b);
    rep.betti.push_back(z - b);
  }
  return rep;
}

CohomologyBasis cohomology_basis(const LieAlgebra& L, std::size_t p) {
  if (p > L.dim())
    throw InputError("cohomology degree " + std::to_string(p) + " out of range 0.." + std::to_string(L.dim()));
  CochainComplex cx = build_complex(L, p);
  CohomologyBasis out;
  out.degree = p;
  out.monomials = cx.bases[p];
  out.cocycles = kernel_basis(cx.d[p]);
  if (p > 0) out.coboundaries = column_space_basis(cx.d[p - 1]);
  const std::size_t len = out.monomials.size();
  std::vector<Vector> acc = out.coboundaries;
  std::size_t r = acc.empty() ? 0 : rank(Matrix::from_rows(acc, len));
  for (const auto& z : out.cocycles) {
    acc.push_back(z);
    std::size_t r2 = rank(Matrix::from_rows(acc, len));
    if (r2 > r) {
      out.representatives.push_back(z);
      r = r2;
    } else {
      acc.pop_back();
    }
  }
  return out;
}

CocompletenessReport is_cocomplete(const LieAlgebra& L) {
  CocompletenessReport rep;
  CohomologyReport full = cohomology_report(L);
  rep.betti = full.betti;
  if (L.dim() < 2) {
    rep.dim_z2 = 0;
    rep.dim_b2 = 0;
    rep.b2 = 0;
    rep.coboundaries_closed = true;
  } else {
    rep.dim_z2 = full.cocycle_dims[2];
    rep.dim_b2 = full.coboundary_dims[2];
    rep.b2 = full.betti[2];
    CochainComplex cx = build_complex(L, 2);
    rep.coboundaries_closed = (cx.d[2] * cx.d[1]).is_zero();
  }
  rep.cocomplete = rep.b2 == 0 && rep.coboundaries_closed;
  return rep;
}

std::size_t kunneth_b2(const LieAlgebra& L1, const LieAlgebra& L2) {
  auto b = [](const LieAlgebra& L) {
    CohomologyReport r = cohomology_report(L, 2);
    std::vector<std::size_t> betti = r.betti;
    betti.resize(3, 0);
    return betti;
  };
  auto b1 = b(L1);
  auto b2 = b(L2);
  return b1[2] + b1[1] * b2[1] + b2[2];
}

std::string format_form(const LieAlgebra& L, const std::vector<Subset>& monomials, const Vector& coords) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const Scalar& c = coords[i];
    if (c.is_zero()) continue;
    std::string mag;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.real()) < 0;
      mag = (negative ? -c : c).to_string();
    } else {
      mag = "(" + c.to_string() + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (mag != "1" || monomials[i].empty()) os << mag << (monomials[i].empty() ? "" : " ");
    for (std::size_t k = 0; k < monomials[i].size(); ++k)
      os << (k ? "∧" : "") << L.basis_names()[monomials[i][k]] << '*';
  }
  return first ? "0" : os.str();
}

}  // namespace liecc
