#include "smx/dense_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "smx/error.hpp"

namespace smx {

namespace {

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::ZeroDimension, "matrix " + dims(rows_, cols_) + " has an empty axis");
  }
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(entries_.size()) + " entries for a " + dims(rows_, cols_) +
                    " matrix");
  }
}

DenseMatrix DenseMatrix::zero(std::size_t rows, std::size_t cols) {
  return DenseMatrix(rows, cols, std::vector<Rational>(rows * cols));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Rational(1);
  return DenseMatrix(n, n, std::move(e));
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<Rational>> converted;
  converted.reserve(rows.size());
  for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
  return from_rows(converted);
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Rational> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw Error(ErrorKind::DimensionMismatch, "rows of unequal length");
    }
    e.insert(e.end(), row.begin(), row.end());
  }
  return DenseMatrix(r, c, std::move(e));
}

const Rational& DenseMatrix::operator()(std::size_t r, std::size_t c) const {
  assert(r < rows_ && c < cols_);
  return entries_[r * cols_ + c];
}

bool DenseMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

bool DenseMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

DenseMatrix DenseMatrix::transposed() const {
  std::vector<Rational> e;
  e.reserve(entries_.size());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) e.push_back((*this)(i, j));
  }
  return DenseMatrix(cols_, rows_, std::move(e));
}

DenseMatrix DenseMatrix::submatrix(std::size_t row, std::size_t col, std::size_t nrows,
                                   std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "submatrix exceeds " + dims(rows_, cols_));
  }
  std::vector<Rational> e;
  e.reserve(nrows * ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    const auto first = entries_.begin() + static_cast<std::ptrdiff_t>((row + i) * cols_ + col);
    e.insert(e.end(), first, first + static_cast<std::ptrdiff_t>(ncols));
  }
  return DenseMatrix(nrows, ncols, std::move(e));
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "cannot multiply " + dims(a.rows(), a.cols()) + " by " + dims(b.rows(), b.cols()));
  }
  std::vector<Rational> out(a.rows() * b.cols());
  // i-k-j order: one scalar of `a` scales a full row of `b`.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational* row = out.data() + i * b.cols();
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& s = a(i, k);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) row[j] += s * b(k, j);
    }
  }
  return DenseMatrix(a.rows(), b.cols(), std::move(out));
}

DenseMatrix vstack(std::span<const DenseMatrix> parts) {
  if (parts.empty()) throw Error(ErrorKind::ZeroDimension, "nothing to stack");
  const std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  std::vector<Rational> e;
  for (const auto& p : parts) {
    if (p.cols() != cols) {
      throw Error(ErrorKind::DimensionMismatch, "vertical stack needs equal column counts");
    }
    rows += p.rows();
    e.insert(e.end(), p.entries().begin(), p.entries().end());
  }
  return DenseMatrix(rows, cols, std::move(e));
}

DenseMatrix hstack(std::span<const DenseMatrix> parts) {
  if (parts.empty()) throw Error(ErrorKind::ZeroDimension, "nothing to stack");
  const std::size_t rows = parts.front().rows();
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) {
      throw Error(ErrorKind::DimensionMismatch, "horizontal stack needs equal row counts");
    }
    cols += p.cols();
  }
  std::vector<Rational> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (const auto& p : parts) {
      const auto row = p.entries().subspan(i * p.cols(), p.cols());
      e.insert(e.end(), row.begin(), row.end());
    }
  }
  return DenseMatrix(rows, cols, std::move(e));
}

}  // namespace smx
