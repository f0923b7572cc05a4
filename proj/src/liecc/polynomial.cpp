#include "liecc/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "liecc/errors.hpp"

namespace liecc {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  Scalar inv = leading().inverse();
  for (auto& c : p.coeffs_) c *= inv;
  return p;
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::reflected() const {
  Polynomial p = *this;
  for (std::size_t k = 1; k < p.coeffs_.size(); k += 2) p.coeffs_[k] = -p.coeffs_[k];
  return p;
}

Polynomial Polynomial::rescaled(const Scalar& a) const {
  if (is_zero()) return *this;
  const auto n = static_cast<unsigned>(degree());
  Polynomial p = *this;
  for (unsigned k = 0; k <= n; ++k) p.coeffs_[k] *= a.pow(n - k);
  p.normalize();
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string mag;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.real()) < 0;
      mag = (negative ? -c : c).to_string();
    } else {
      mag = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag == "1";
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Scalar> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Scalar> quot(rem.size() - db);
  Scalar inv_lead = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    Scalar f = rem[k] * inv_lead;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coefficients()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw InputError("poly_gcd: both arguments are zero");
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool divides(const Polynomial& d, const Polynomial& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).second.is_zero();
}

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw InputError("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix acc(n, n);  // M_k of the Faddeev-LeVerrier recurrence
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    c[n - k] = -(m * acc).trace() / Scalar(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

void swap_rows(PolyMatrix& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

void swap_cols(PolyMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

std::vector<Polynomial> frobenius_form(const Matrix& m) {
  if (!m.is_square()) throw InputError("frobenius_form: matrix is not square");
  const std::size_t n = m.rows();
  PolyMatrix a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = i == j ? Polynomial({-m(i, j), Scalar(1)}) : Polynomial::constant(-m(i, j));

  // Smith normal form over K[x]; det(xI - m) != 0 so no zero pivot appears.
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t pr = n, pc = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!a[i][j].is_zero() && (pr == n || a[i][j].degree() < a[pr][pc].degree())) {
            pr = i;
            pc = j;
          }
      if (pr == n) throw InvariantError("frobenius_form: singular characteristic matrix");
      swap_rows(a, k, pr);
      swap_cols(a, k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        Polynomial q = divmod(a[i][k], a[k][k]).first;
        for (std::size_t j = k; j < n; ++j) a[i][j] -= q * a[k][j];
        if (!a[i][k].is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].is_zero()) continue;
        Polynomial q = divmod(a[k][j], a[k][k]).first;
        for (std::size_t i = k; i < n; ++i) a[i][j] -= q * a[i][k];
        if (!a[k][j].is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row k and go again.
      std::size_t bad = n;
      for (std::size_t i = k + 1; i < n && bad == n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!divides(a[k][k], a[i][j])) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = k; j < n; ++j) a[k][j] += a[bad][j];
    }
  }

  std::vector<Polynomial> factors;
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial d = a[k][k].monic();
    if (d.degree() >= 1) factors.push_back(std::move(d));
  }
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Polynomial& x, const Polynomial& y) { return x.degree() < y.degree(); });
  return factors;
}

Matrix companion(const Polynomial& p) {
  Polynomial q = p.monic();
  if (q.degree() < 1) throw InputError("companion: polynomial must have positive degree");
  const auto n = static_cast<std::size_t>(q.degree());
  Matrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -q.coefficient(i);
  return c;
}

namespace {

/// Exact integer m-th root of a non-negative integer, if any.
std::optional<mpz_class> exact_root(const mpz_class& v, unsigned m) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), m) == 0) return std::nullopt;
  return r;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

mpz_class ipow(const mpz_class& b, unsigned e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

// Enumeration bound for the Gaussian search; inputs here are tiny.
const mpz_class kMaxGaussianSearch("100000000");

}  // namespace

std::vector<Scalar> field_roots_of_binomial(unsigned m, const Scalar& r, Field field) {
  if (m == 0) throw InputError("field_roots_of_binomial: exponent must be at least 1");
  if (r.is_zero()) throw InputError("field_roots_of_binomial: r must be nonzero");
  if (m == 1) return {r};

  // Any root a satisfies (L a)^m = r L^m with L the common denominator of r,
  // and L a is integral (Z and Z[i] are integrally closed).
  const mpz_class L = lcm(r.real().get_den(), r.imag().get_den());
  const mpz_class Lpow = ipow(L, m);
  std::vector<Scalar> roots;

  if (field == Field::real || r.is_real()) {
    if (r.is_real()) {
      mpq_class g = r.real() * mpq_class(Lpow);
      mpz_class gi = g.get_num();  // integral by choice of L
      bool negative = sgn(gi) < 0;
      if (!(negative && m % 2 == 0)) {
        if (auto root = exact_root(abs(gi), m)) {
          mpq_class a(negative ? mpz_class(-*root) : *root, L);
          a.canonicalize();
          roots.emplace_back(a);
          if (m % 2 == 0) roots.emplace_back(mpq_class(-a));
        }
      }
    }
    if (field == Field::real) return roots;
    roots.clear();
  }

  // Gaussian search: gamma in Z[i] with gamma^m = g, N(gamma) = N(g)^(1/m).
  const Scalar g = r * Scalar(mpq_class(Lpow));
  const mpz_class norm_g = g.norm().get_num();
  auto norm_gamma = exact_root(norm_g, m);
  if (!norm_gamma) return {};
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm_gamma->get_mpz_t());
  if (bound > kMaxGaussianSearch) throw InputError("field_roots_of_binomial: Gaussian root search too large");
  for (mpz_class x = -bound; x <= bound; ++x) {
    mpz_class y2 = *norm_gamma - x * x;
    if (sgn(y2) < 0) continue;
    auto y = exact_root(y2, 2);
    if (!y) continue;
    for (int s : {1, -1}) {
      if (s == -1 && *y == 0) continue;
      Scalar gamma{mpq_class(x), mpq_class(s * *y)};
      if (gamma.pow(m) == g) roots.push_back(gamma / Scalar(mpq_class(L)));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) {
    if (a.is_real() != b.is_real()) return a.is_real();
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return roots;
}

}  // namespace liecc
