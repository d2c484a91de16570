#pragma once

#include "loopspace/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace loopspace {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Rational> column(std::size_t c) const;

  Matrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Rational> operator*(const Matrix& a, std::span<const Rational> x);

/// Rank by fraction-free (Bareiss) elimination. Rows are scaled to integers
/// first; every intermediate quantity is an exact integer.
std::size_t rank(const Matrix& m);

/// Reduced row echelon form over Q.
///
/// Pivot rule: the leftmost column with a nonzero entry among the
/// unprocessed rows; within that column the row whose entry has the smallest
/// numerator magnitude (ties broken by lower row index).
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};
RowEchelon row_reduce(Matrix m);

/// Basis of { x : m x = 0 }, one vector per free column in increasing
/// column order, with a 1 in that free column.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<std::vector<Rational>> solve(const Matrix& m, std::span<const Rational> b);

/// Incrementally maintained row space, used to test membership and extend
/// spanning sets one vector at a time.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v if it is independent of the current span; returns true if added.
  bool insert(std::span<const Rational> v);
  bool contains(std::span<const Rational> v) const;

 private:
  std::vector<Rational> reduce(std::span<const Rational> v) const;

  std::size_t dim_;
  // Echelon rows with unit pivots; pivots_[i] is the pivot column of rows_[i].
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace loopspace
