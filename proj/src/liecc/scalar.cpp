#include "liecc/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "liecc/errors.hpp"

namespace liecc {

const char* to_string(Field f) { return f == Field::real ? "real" : "complex"; }

Field parse_field(std::string_view s) {
  if (s == "real") return Field::real;
  if (s == "complex") return Field::complex;
  throw InputError("unknown field '" + std::string(s) + "' (expected real or complex)");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpq_class parse_fraction(std::string_view text, std::string_view whole) {
  auto bad = [&](const std::string& why) {
    return InputError("malformed scalar '" + std::string(whole) + "': " + why);
  };
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s = trim(s.substr(1));
  }
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!all_digits(num)) throw bad("expected an integer numerator");
  if (!all_digits(den)) throw bad("expected an integer denominator");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw bad("zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

Scalar::Scalar(long num, long den) : re_(num, den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InputError("malformed scalar '': empty");
  if (s.back() != 'i') return Scalar(parse_fraction(s, text));

  s = trim(s.substr(0, s.size() - 1));
  // Split at the last sign that is not leading; everything after it is the
  // imaginary coefficient.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if (s[p] == '+' || s[p] == '-') {
      split = p;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos ? std::string_view() : s.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? s : s.substr(split);
  imag_part = trim(imag_part);
  mpq_class im;
  if (imag_part.empty() || imag_part == "+") {
    im = 1;
  } else if (imag_part == "-") {
    im = -1;
  } else {
    im = parse_fraction(imag_part, text);
  }
  mpq_class re = trim(real_part).empty() ? mpq_class(0) : parse_fraction(real_part, text);
  return Scalar(re, im);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  if (sgn(im_) == 0) return Scalar(mpq_class(1 / re_));
  mpq_class n = norm();
  return Scalar(mpq_class(re_ / n), mpq_class(-im_ / n));
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1);
  Scalar base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string Scalar::to_string() const {
  auto frac = [](const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
  };
  if (sgn(im_) == 0) return frac(re_);
  std::string out;
  if (sgn(re_) != 0) out = frac(re_);
  if (sgn(im_) > 0 && !out.empty()) out += '+';
  out += frac(im_);
  out += " i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace liecc
