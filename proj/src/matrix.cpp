#include "entrocone/matrix.hpp"

#include <sstream>
#include <utility>

namespace entrocone {

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_columns(const std::vector<std::vector<Rational>>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  RMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ShapeError("columns of unequal length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rational> RMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product dimension mismatch");
  RMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

std::vector<Rational> operator*(const RMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw ShapeError("matrix-vector dimension mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), x);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw ShapeError("dot product length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

std::string RMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << (r + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Rational determinant(const RMatrix& a) {
  if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).denominator().get_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).numerator() * (l / a(i, j).denominator());
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

namespace {

// Reduces [a | b] to [I | x]; b has `extra` columns.
RMatrix gauss_jordan(const RMatrix& a, RMatrix aug) {
  const std::size_t n = a.rows();
  const std::size_t extra = aug.cols();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + extra));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    for (std::size_t j = 0; j < extra; ++j) m[i][n + j] = aug(i, j);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular");
    std::swap(m[p], m[k]);
    const Rational inv = m[k][k].reciprocal();
    for (std::size_t j = k; j < n + extra; ++j) m[k][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k].is_zero()) continue;
      const Rational f = m[i][k];
      for (std::size_t j = k; j < n + extra; ++j) {
        if (!m[k][j].is_zero()) m[i][j] -= f * m[k][j];
      }
    }
  }
  RMatrix out(n, extra);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < extra; ++j) out(i, j) = m[i][n + j];
  return out;
}

}  // namespace

RMatrix invert(const RMatrix& a) {
  if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
  return gauss_jordan(a, RMatrix::identity(a.rows()));
}

std::vector<Rational> solve(const RMatrix& a, std::span<const Rational> b) {
  if (!a.is_square()) throw ShapeError("solve with a non-square matrix");
  if (b.size() != a.rows()) throw ShapeError("right-hand side length mismatch");
  RMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  return gauss_jordan(a, rhs).column(0);
}

std::vector<BigInt> primitive(std::span<const Rational> v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<BigInt> ints(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].numerator() * (l / v[i].denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g != 0) {
    for (auto& x : ints) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return ints;
}

bool same_ray(std::span<const Rational> a, std::span<const Rational> b) {
  return a.size() == b.size() && primitive(a) == primitive(b);
}

std::vector<Rational> to_rationals(const std::vector<BigInt>& v) {
  return {v.begin(), v.end()};
}

RMatrix primitive_rows(const RMatrix& m) {
  RMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto p = primitive(m.row(r));
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = p[c];
  }
  return out;
}

RMatrix primitive_columns(const RMatrix& m) { return primitive_rows(m.transpose()).transpose(); }

}  // namespace entrocone
