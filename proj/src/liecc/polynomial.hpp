#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liecc/matrix.hpp"
#include "liecc/scalar.hpp"

namespace liecc {

/// Univariate polynomial, coefficients lowest degree first. Trailing zeros
/// are stripped on every mutation, so the zero polynomial has no
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  Polynomial(std::initializer_list<Scalar> coeffs) : Polynomial(std::vector<Scalar>(coeffs)) {}

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }
  /// x - root
  static Polynomial linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k, zero past the degree.
  Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Scalar evaluate(const Scalar& x) const;
  /// p(-x)
  Polynomial reflected() const;
  /// a^deg * p(x / a); the characteristic polynomial of a*M when p is that of M.
  Polynomial rescaled(const Scalar& a) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws std::domain_error when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd by the Euclidean algorithm. Throws InputError if both are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);
bool divides(const Polynomial& d, const Polynomial& p);

/// Monic det(xI - m) by Faddeev-LeVerrier. Throws InputError if non-square.
Polynomial char_poly(const Matrix& m);

/// Invariant factors of m (the non-unit diagonal of the Smith form of
/// xI - m over K[x]), each monic and dividing the next. Two matrices are
/// similar over K exactly when these lists agree.
std::vector<Polynomial> frobenius_form(const Matrix& m);

/// Companion matrix of a monic polynomial (ones on the subdiagonal, last
/// column = -coefficients).
Matrix companion(const Polynomial& p);

/// All a in the working field with a^m = r. Rational mode enumerates
/// rational roots; complex mode enumerates Gaussian-rational roots. Throws
/// InputError when m == 0 or r == 0.
std::vector<Scalar> field_roots_of_binomial(unsigned m, const Scalar& r, Field field);

}  // namespace liecc
