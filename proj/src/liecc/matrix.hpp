#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liecc/scalar.hpp"

namespace liecc {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q or Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-list literal; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> d);
  static Matrix from_columns(std::span<const Vector> cols, std::size_t rows);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  bool is_zero() const;
  bool is_real() const;
  Matrix transpose() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with the list of pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space, one vector per free column; empty iff m
/// is injective.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Throws InputError for non-square input.
Scalar determinant(const Matrix& m);
/// Throws InputError when singular or non-square.
Matrix inverse(const Matrix& m);
/// Some x with m * x = b, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Independent subset of the columns spanning the column space.
std::vector<Vector> column_space_basis(const Matrix& m);
/// Echelon basis of span(vectors); each vector has length `dim`.
std::vector<Vector> span_basis(std::span<const Vector> vectors, std::size_t dim);
/// True when v lies in span(basis).
bool in_span(std::span<const Vector> basis, const Vector& v, std::size_t dim);

bool is_zero(const Vector& v);
Vector scaled(const Vector& v, const Scalar& s);
Vector add(const Vector& a, const Vector& b);

}  // namespace liecc
