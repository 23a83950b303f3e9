#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "smx/rational.hpp"

namespace smx {

// Row-major rectangular array of rationals; both extents are at least 1.
class DenseMatrix {
 public:
  // ZeroDimension when rows or cols is 0; DimensionMismatch when the entry
  // count is not rows*cols.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static DenseMatrix zero(std::size_t rows, std::size_t cols);
  static DenseMatrix identity(std::size_t n);
  // Integer literal rows, for fixtures. RaggedRows-free: mismatched lengths
  // throw DimensionMismatch.
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static DenseMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  // 0-based; unchecked beyond a debug assert.
  const Rational& operator()(std::size_t r, std::size_t c) const;

  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;
  bool is_symmetric() const;

  DenseMatrix transposed() const;
  DenseMatrix submatrix(std::size_t row, std::size_t col, std::size_t nrows,
                        std::size_t ncols) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

// Plain matrix product; DimensionMismatch unless a.cols() == b.rows().
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

// Stack matrices top-to-bottom (same column count) or left-to-right (same row count).
DenseMatrix vstack(std::span<const DenseMatrix> parts);
DenseMatrix hstack(std::span<const DenseMatrix> parts);

}  // namespace smx
