#include "liecc/almost_abelian.hpp"

#include "liecc/cohomology.hpp"
#include "liecc/errors.hpp"

namespace liecc {

AlmostAbelian make_almost_abelian(const Matrix& D, Field field) {
  if (!D.is_square()) throw InputError("make_almost_abelian: matrix is not square");
  if (D.is_zero()) throw InputError("make_almost_abelian: D = 0 gives an abelian algebra, not an almost abelian one");
  AlmostAbelian aa;
  aa.n = D.rows();
  aa.D = D;
  aa.algebra = semidirect_1dim(LieAlgebra::abelian(aa.n, field), D);
  return aa;
}

EigenvalueReport eigenvalue_cocomplete(const Matrix& D) {
  if (!D.is_square()) throw InputError("eigenvalue_cocomplete: matrix is not square");
  EigenvalueReport rep;
  rep.char_poly = char_poly(D);
  const auto& c = rep.char_poly.coefficients();
  std::size_t zero_mult = 0;
  while (zero_mult < c.size() && c[zero_mult].is_zero()) ++zero_mult;
  rep.invertible = zero_mult == 0;
  Polynomial stripped(std::vector<Scalar>(c.begin() + static_cast<std::ptrdiff_t>(zero_mult), c.end()));
  rep.pair_gcd = poly_gcd(stripped, stripped.reflected());
  // A zero eigenvalue of multiplicity two is a pair summing to zero too.
  rep.eigen_pair_obstruction = zero_mult >= 2 || rep.pair_gcd.degree() > 0;
  rep.cocomplete = rep.invertible && !rep.eigen_pair_obstruction;
  return rep;
}

Matrix wedge2_action(const Matrix& D) {
  if (!D.is_square()) throw InputError("wedge2_action: matrix is not square");
  const std::size_t n = D.rows();
  const std::vector<Subset> pairs = subsets(n, 2);
  Matrix A(pairs.size(), pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    const std::size_t a = pairs[col][0];
    const std::size_t b = pairs[col][1];
    for (std::size_t row = 0; row < pairs.size(); ++row) {
      const std::size_t i = pairs[row][0];
      const std::size_t j = pairs[row][1];
      // w = e_a^* ^ e_b^*, w(u, v) = u_a v_b - u_b v_a.
      Scalar v;
      if (b == j) v += D(a, i);
      if (a == j) v -= D(b, i);
      if (a == i) v += D(b, j);
      if (b == i) v -= D(a, j);
      A(row, col) = v;
    }
  }
  return A;
}

std::size_t h2_via_wedge_action(const Matrix& D) {
  if (!D.is_square()) throw InputError("h2_via_wedge_action: matrix is not square");
  const std::size_t n = D.rows();
  std::size_t cancelled = n < 2 ? 0 : kernel_basis(wedge2_action(D)).size();
  return cancelled + (n - rank(D));
}

std::optional<ProportionalSimilarity> proportionally_similar(const Matrix& D1, const Matrix& D2, Field field) {
  if (!D1.is_square() || !D2.is_square() || D1.rows() != D2.rows())
    throw InputError("proportionally_similar: matrices must be square of the same size");
  if (field == Field::real && (!D1.is_real() || !D2.is_real()))
    throw InputError("proportionally_similar: Gaussian entries in real mode");
  const std::size_t n = D1.rows();
  const Polynomial p1 = char_poly(D1);
  const Polynomial p2 = char_poly(D2);

  std::optional<std::size_t> anchor;
  for (std::size_t k = 0; k < n; ++k) {
    const bool z1 = p1.coefficient(k).is_zero();
    if (z1 != p2.coefficient(k).is_zero()) return std::nullopt;
    if (!z1 && !anchor) anchor = k;
  }

  std::vector<Scalar> candidates;
  if (anchor) {
    candidates = field_roots_of_binomial(static_cast<unsigned>(n - *anchor),
                                         p1.coefficient(*anchor) / p2.coefficient(*anchor), field);
  } else {
    // Both nilpotent; scaling preserves the nilpotent similarity class.
    candidates = {Scalar(1)};
  }

  const std::vector<Polynomial> target = frobenius_form(D1);
  for (const auto& alpha : candidates) {
    bool consistent = true;
    for (std::size_t k = 0; k < n && consistent; ++k)
      consistent = p1.coefficient(k) == alpha.pow(static_cast<unsigned>(n - k)) * p2.coefficient(k);
    if (!consistent) continue;
    std::vector<Polynomial> scaled = frobenius_form(D2 * alpha);
    if (scaled == target) return ProportionalSimilarity{alpha, target, scaled};
  }
  return std::nullopt;
}

namespace {

Matrix diag2(const Scalar& a, const Scalar& b) { return Matrix{{a, Scalar(0)}, {Scalar(0), b}}; }
Matrix rotation(const Scalar& l) { return Matrix{{l, Scalar(1)}, {Scalar(-1), l}}; }

ClassifiedInstance instance(const std::string& family, const std::string& param, Matrix D) {
  ClassifiedInstance ci;
  ci.label = param.empty() ? family : family + "^{" + param + "}";
  ci.parameter = param;
  ci.cocomplete = eigenvalue_cocomplete(D).cocomplete;
  ci.D = std::move(D);
  return ci;
}

void sort_samples(ClassifiedFamily& fam, std::vector<ClassifiedInstance> all) {
  for (auto& ci : all) (ci.cocomplete ? fam.samples : fam.rejected).push_back(std::move(ci));
}

void identify_within(ClassifiedFamily& fam, Field field) {
  for (std::size_t s = 0; s < fam.samples.size(); ++s)
    for (std::size_t t = s + 1; t < fam.samples.size(); ++t)
      if (auto ps = proportionally_similar(fam.samples[s].D, fam.samples[t].D, field))
        fam.identifications.push_back({fam.samples[s].label, fam.samples[t].label, ps->alpha});
}

}  // namespace

Classification3 classify_dim3(Field field) {
  Classification3 out;
  out.field = field;

  const std::vector<Scalar> c31_grid{Scalar(1), Scalar(2), Scalar(1, 2), Scalar(3), Scalar(1, 3), Scalar(-2),
                                     Scalar(-1, 2)};
  const std::vector<Scalar> r33_grid{Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(1, 2), Scalar(-1, 2)};
  for (const auto& s : c31_grid) out.sample_grid.push_back(s.to_string());

  {
    ClassifiedFamily fam;
    fam.name = "C_{3.1}";
    fam.brackets = "[e0,e1] = e1, [e0,e2] = λ e2";
    fam.constraint = "λ ≠ 0, -1; λ ≡ 1/λ";
    fam.representative = "diag(1, λ)";
    std::vector<ClassifiedInstance> all;
    for (const auto& l : c31_grid) all.push_back(instance(fam.name, l.to_string(), diag2(Scalar(1), l)));
    for (const auto& l : {Scalar(0), Scalar(-1)})
      all.push_back(instance(fam.name, l.to_string(), diag2(Scalar(1), l)));
    sort_samples(fam, std::move(all));
    identify_within(fam, field);
    out.families.push_back(std::move(fam));
  }
  {
    ClassifiedFamily fam;
    fam.name = "C_{3.2}";
    fam.brackets = "[e0,e1] = e1, [e0,e2] = e1 + e2";
    fam.representative = "[[1, 1], [0, 1]]";
    sort_samples(fam, {instance(fam.name, "", Matrix{{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}})});
    out.families.push_back(std::move(fam));
  }
  if (field == Field::real) {
    ClassifiedFamily fam;
    fam.name = "R_{3.3}";
    fam.brackets = "[e0,e1] = λ e1 - e2, [e0,e2] = e1 + λ e2";
    fam.constraint = "λ ≠ 0; λ ≡ -λ";
    fam.representative = "[[λ, 1], [-1, λ]]";
    std::vector<ClassifiedInstance> all;
    for (const auto& l : r33_grid) all.push_back(instance(fam.name, l.to_string(), rotation(l)));
    all.push_back(instance(fam.name, "0", rotation(Scalar(0))));
    sort_samples(fam, std::move(all));
    identify_within(fam, field);
    out.families.push_back(std::move(fam));
  } else {
    // Over C the rotation block diagonalizes to diag(λ+i, λ-i), which is
    // C_{3.1} at the Gaussian parameter (λ-i)/(λ+i).
    const Scalar i = Scalar::imaginary_unit();
    for (const auto& l : r33_grid) {
      Scalar mu = (l - i) / (l + i);
      Matrix target = diag2(Scalar(1), mu);
      if (auto ps = proportionally_similar(rotation(l), target, field))
        out.absorbed.push_back({"R_{3.3}^{" + l.to_string() + "}", "C_{3.1}^{" + mu.to_string() + "}", ps->alpha});
    }
  }

  for (std::size_t a = 0; a < out.families.size(); ++a)
    for (std::size_t b = a + 1; b < out.families.size(); ++b)
      for (const auto& s : out.families[a].samples)
        for (const auto& t : out.families[b].samples)
          if (auto ps = proportionally_similar(s.D, t.D, field)) out.cross_family.push_back({s.label, t.label, ps->alpha});
  return out;
}

}  // namespace liecc
