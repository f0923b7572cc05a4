#pragma once
// Reference implementations used only by tests. They follow definitions
// directly (cofactor expansion, interpolation, full tensor cochains) and
// share no code paths with the library beyond Scalar arithmetic and rank.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "liecc/lie_algebra.hpp"
#include "liecc/matrix.hpp"
#include "liecc/polynomial.hpp"

namespace oracle {

using liecc::LieAlgebra;
using liecc::Matrix;
using liecc::Polynomial;
using liecc::Scalar;
using liecc::Vector;

/// Cofactor expansion along the first row.
inline Scalar laplace_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    Scalar term = m(0, c) * laplace_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

/// det(xI - m) by evaluating at x = 0..n and Lagrange interpolation.
inline Polynomial interpolated_char_poly(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Scalar> xs, ys;
  for (std::size_t t = 0; t <= n; ++t) {
    Matrix a = Matrix::identity(n) * Scalar(static_cast<long>(t)) - m;
    xs.emplace_back(static_cast<long>(t));
    ys.push_back(laplace_det(a));
  }
  Polynomial p;
  for (std::size_t i = 0; i <= n; ++i) {
    Polynomial basis = Polynomial::constant(Scalar(1));
    Scalar denom(1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis = basis * Polynomial::linear(xs[j]);
      denom *= xs[i] - xs[j];
    }
    p += basis * (ys[i] / denom);
  }
  return p;
}

/// Determinant of a polynomial matrix by cofactor expansion.
inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(Scalar(1));
  if (n == 1) return m[0][0];
  Polynomial det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) minor[r - 1].push_back(m[r][k]);
    Polynomial term = m[0][c] * poly_det(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(s);
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      s[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
}

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k
/// minors of xI - m, factors d_k / d_(k-1) of positive degree.
inline std::vector<Polynomial> determinantal_invariants(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Polynomial>> xm(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      xm[i][j] = (i == j ? Polynomial::x() : Polynomial()) - Polynomial::constant(m(i, j));
  std::vector<Polynomial> d{Polynomial::constant(Scalar(1))};
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial g;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Polynomial>> sub(k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a].push_back(xm[rows[a]][cols[b]]);
        Polynomial minor = poly_det(sub);
        if (minor.is_zero()) return;
        g = g.is_zero() ? minor.monic() : liecc::poly_gcd(g, minor);
      });
    });
    d.push_back(g);
  }
  std::vector<Polynomial> out;
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial f = liecc::divmod(d[k], d[k - 1]).first;
    if (f.degree() > 0) out.push_back(f);
  }
  return out;
}

/// Betti numbers from cochains stored as full alternating tensors indexed by
/// ordered p-tuples; d follows the alternating-sum definition on every
/// tuple, with no reference to a wedge basis.
inline std::vector<std::size_t> tensor_betti(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  auto power = [n](std::size_t p) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < p; ++i) r *= n;
    return r;
  };
  auto decode = [n](std::size_t idx, std::size_t p) {
    std::vector<std::size_t> t(p);
    for (std::size_t i = p; i-- > 0;) {
      t[i] = idx % n;
      idx /= n;
    }
    return t;
  };
  auto encode = [n](const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (auto v : t) idx = idx * n + v;
    return idx;
  };
  // Alternating basis tensors for degree p (one per strictly increasing tuple).
  auto alt_basis = [&](std::size_t p) {
    std::vector<Vector> basis;
    for_each_subset(n, p, [&](const std::vector<std::size_t>& s) {
      Vector v(power(p));
      std::vector<std::size_t> perm(p);
      for (std::size_t i = 0; i < p; ++i) perm[i] = i;
      do {
        std::vector<std::size_t> t(p);
        for (std::size_t i = 0; i < p; ++i) t[i] = s[perm[i]];
        int inversions = 0;
        for (std::size_t a = 0; a < p; ++a)
          for (std::size_t b = a + 1; b < p; ++b)
            if (perm[a] > perm[b]) ++inversions;
        v[encode(t)] = inversions % 2 ? Scalar(-1) : Scalar(1);
      } while (std::next_permutation(perm.begin(), perm.end()));
      basis.push_back(std::move(v));
    });
    return basis;
  };
  // (dw)(x_0..x_p) = sum_{a<b} (-1)^{a+b} w([x_a, x_b], x_0..^a..^b..x_p)
  auto apply_d = [&](const Vector& w, std::size_t p) {
    Vector out(power(p + 1));
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
      auto x = decode(idx, p + 1);
      Scalar acc;
      for (std::size_t a = 0; a <= p; ++a)
        for (std::size_t b = a + 1; b <= p; ++b) {
          Vector br = L.bracket_basis(x[a], x[b]);
          for (std::size_t k = 0; k < n; ++k) {
            if (br[k].is_zero()) continue;
            std::vector<std::size_t> t{k};
            for (std::size_t c = 0; c <= p; ++c)
              if (c != a && c != b) t.push_back(x[c]);
            Scalar term = br[k] * w[encode(t)];
            acc += ((a + b) % 2) ? -term : term;
          }
        }
      out[idx] = acc;
    }
    return out;
  };
  std::vector<std::size_t> rank_d(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    auto basis = alt_basis(p);
    std::vector<Vector> images;
    for (const auto& b : basis) images.push_back(apply_d(b, p));
    rank_d[p] = liecc::rank(Matrix::from_rows(images, power(p + 1)));
  }
  std::vector<std::size_t> betti;
  for (std::size_t p = 0; p <= n; ++p) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < p; ++i) dim = dim * (n - i) / (i + 1);
    betti.push_back(dim - rank_d[p] - (p ? rank_d[p - 1] : 0));
  }
  return betti;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(dist(rng));
  return m;
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t n, int lo, int hi) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, lo, hi);
    if (!laplace_det(m).is_zero()) return m;
  }
}

}  // namespace oracle
