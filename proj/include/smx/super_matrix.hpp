#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "smx/dense_matrix.hpp"
#include "smx/partition.hpp"

namespace smx {

enum class Axis { Row, Column };

struct GridShape {
  std::size_t row_blocks;
  std::size_t col_blocks;
  friend bool operator==(const GridShape&, const GridShape&) = default;
};

// A dense matrix with a row and a column partition. Both trivial = simple matrix.
class SuperMatrix {
 public:
  // DimensionMismatch when a partition length differs from the matching extent.
  SuperMatrix(DenseMatrix data, Partition row_partition, Partition col_partition);

  // Simple matrix: no cuts on either axis.
  explicit SuperMatrix(DenseMatrix data);

  const DenseMatrix& data() const noexcept { return data_; }
  const Partition& row_partition() const noexcept { return row_partition_; }
  const Partition& col_partition() const noexcept { return col_partition_; }
  std::size_t rows() const noexcept { return data_.rows(); }
  std::size_t cols() const noexcept { return data_.cols(); }
  bool is_simple() const noexcept {
    return row_partition_.is_trivial() && col_partition_.is_trivial();
  }

 private:
  DenseMatrix data_;
  Partition row_partition_;
  Partition col_partition_;
};

// Convenience: validates cuts and dimensions in one go.
SuperMatrix make_super(DenseMatrix data, const std::vector<std::ptrdiff_t>& row_cuts,
                       const std::vector<std::ptrdiff_t>& col_cuts);

GridShape grid_shape(const SuperMatrix& s);

// 1-based block indices; BlockIndexOutOfRange otherwise.
DenseMatrix block(const SuperMatrix& s, std::size_t i, std::size_t j);

DenseMatrix flatten(const SuperMatrix& s);

// Axis::Row yields the block rows (each keeps the column partition);
// Axis::Column yields the block columns (each keeps the row partition).
std::vector<SuperMatrix> strips(const SuperMatrix& s, Axis axis);

// Inverse of strips(): concatenates along `axis`, placing a cut at every seam.
// Strips must share the cross-axis partition (PartitionMismatch otherwise) and
// be trivially partitioned along `axis`.
SuperMatrix join_strips(std::span<const SuperMatrix> parts, Axis axis);

}  // namespace smx
