#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "entrocone/rational.hpp"

namespace entrocone {

/// Wrong dimensions for the requested operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inverse or linear solve requested on a matrix with zero determinant.
class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense row-major matrix of exact rationals.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of equal length).
  static RMatrix from_columns(const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Rational> column(std::size_t c) const;

  RMatrix transpose() const;

  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend bool operator==(const RMatrix& a, const RMatrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<Rational> operator*(const RMatrix& a, std::span<const Rational> x);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Exact determinant. Each row is scaled to integers and reduced with
/// Bareiss' fraction-free elimination, so every intermediate is an integer.
Rational determinant(const RMatrix& a);

/// Exact inverse by Gauss-Jordan elimination over the rationals.
RMatrix invert(const RMatrix& a);

/// Solves a x = b exactly for square nonsingular a.
std::vector<Rational> solve(const RMatrix& a, std::span<const Rational> b);

/// Primitive integer form: the positive rational multiple of v with coprime
/// integer entries. The zero vector maps to itself.
std::vector<BigInt> primitive(std::span<const Rational> v);

/// True iff a = c * b for some rational c > 0 (or both are zero).
bool same_ray(std::span<const Rational> a, std::span<const Rational> b);

std::vector<Rational> to_rationals(const std::vector<BigInt>& v);

/// Applies `primitive` to every row.
RMatrix primitive_rows(const RMatrix& m);
/// Applies `primitive` to every column.
RMatrix primitive_columns(const RMatrix& m);

}  // namespace entrocone
