#pragma once

#include <corners/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace corners {

// Dense matrix of exact rationals, row-major, 0-based indexing.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows,
                          std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> col(std::size_t c) const;
  bool row_is_zero(std::size_t r) const;

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> keep) const;
  Matrix select_cols(std::span<const std::size_t> keep) const;
  Matrix drop_row(std::size_t r) const;
  Matrix drop_col(std::size_t c) const;
  // Inserts a zero row before index r (r == rows() appends).
  Matrix insert_zero_row(std::size_t r) const;
  Matrix insert_zero_col(std::size_t c) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<Rational> operator*(const Matrix& m, std::span<const Rational> v);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan elimination; the pivot in each row is the leftmost nonzero.
RowEchelon row_echelon(Matrix m);
std::size_t rank(const Matrix& m);

// Columns form a basis of the right kernel. One basis vector per free column,
// in increasing column order, normalised to 1 in its free coordinate.
Matrix kernel_basis(const Matrix& m);

Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

// Unique X with a * X = b, provided a has full column rank and the system is
// consistent; std::nullopt otherwise.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Indices of a maximal independent set of columns, scanning left to right
// (or right to left) and keeping every column that raises the rank.
std::vector<std::size_t> independent_columns(const Matrix& m, bool from_right = false);

}  // namespace corners
