#pragma once

#include "fpcat/ring.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fpcat {

/// Dense row-major matrix over a computable ring.
///
/// Under the row convention an m x n matrix is a map R^{1xm} -> R^{1xn};
/// 0 x n and n x 0 shapes stand for maps out of / into the zero module.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  /// Convenience for literals: every row must have the same length.
  static Matrix from_rows(Ring ring, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(Ring ring, std::size_t cols, const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(Ring ring, std::size_t n);
  static Matrix zero(Ring ring, std::size_t rows, std::size_t cols) { return Matrix(ring, rows, cols); }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& value);

  bool is_zero() const;
  bool operator==(const Matrix& other) const;

  Matrix transpose() const;
  Matrix operator-() const;

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  Matrix row_range(std::size_t r0, std::size_t nr) const { return block(r0, nr, 0, cols_); }
  Matrix col_range(std::size_t c0, std::size_t nc) const { return block(0, rows_, c0, nc); }

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix scale(const Scalar& c, const Matrix& a);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return mat_sub(a, b); }

/// Vertical concatenation (same column count).
Matrix stack(std::span<const Matrix> blocks);
Matrix stack(const Matrix& top, const Matrix& bottom);
/// Horizontal concatenation (same row count).
Matrix augment(std::span<const Matrix> blocks);
Matrix augment(const Matrix& left, const Matrix& right);
Matrix block_diagonal(std::span<const Matrix> blocks);
/// Row-major Kronecker product: entry (i*p + k, j*q + l) = a(i,j) * b(k,l).
Matrix kronecker(const Matrix& a, const Matrix& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace fpcat
