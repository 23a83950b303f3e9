#include "smx/super_matrix.hpp"

#include <string>

#include "smx/error.hpp"

namespace smx {

SuperMatrix::SuperMatrix(DenseMatrix data, Partition row_partition, Partition col_partition)
    : data_(std::move(data)),
      row_partition_(std::move(row_partition)),
      col_partition_(std::move(col_partition)) {
  if (row_partition_.length() != data_.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "row partition length " + std::to_string(row_partition_.length()) +
                    " vs " + std::to_string(data_.rows()) + " rows");
  }
  if (col_partition_.length() != data_.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "column partition length " + std::to_string(col_partition_.length()) +
                    " vs " + std::to_string(data_.cols()) + " columns");
  }
}

SuperMatrix::SuperMatrix(DenseMatrix data)
    : data_(std::move(data)),
      row_partition_(Partition::trivial(data_.rows())),
      col_partition_(Partition::trivial(data_.cols())) {}

SuperMatrix make_super(DenseMatrix data, const std::vector<std::ptrdiff_t>& row_cuts,
                       const std::vector<std::ptrdiff_t>& col_cuts) {
  auto rp = Partition::make(data.rows(), row_cuts);
  auto cp = Partition::make(data.cols(), col_cuts);
  return SuperMatrix(std::move(data), std::move(rp), std::move(cp));
}

GridShape grid_shape(const SuperMatrix& s) {
  return {s.row_partition().block_count(), s.col_partition().block_count()};
}

DenseMatrix block(const SuperMatrix& s, std::size_t i, std::size_t j) {
  const auto grid = grid_shape(s);
  if (i < 1 || i > grid.row_blocks || j < 1 || j > grid.col_blocks) {
    throw Error(ErrorKind::BlockIndexOutOfRange,
                "block (" + std::to_string(i) + "," + std::to_string(j) + ") of a " +
                    std::to_string(grid.row_blocks) + "x" + std::to_string(grid.col_blocks) +
                    " grid");
  }
  const auto& rp = s.row_partition();
  const auto& cp = s.col_partition();
  return s.data().submatrix(rp.block_offset(i - 1), cp.block_offset(j - 1),
                            rp.block_size(i - 1), cp.block_size(j - 1));
}

DenseMatrix flatten(const SuperMatrix& s) { return s.data(); }

std::vector<SuperMatrix> strips(const SuperMatrix& s, Axis axis) {
  std::vector<SuperMatrix> out;
  if (axis == Axis::Row) {
    const auto& rp = s.row_partition();
    for (std::size_t b = 0; b < rp.block_count(); ++b) {
      const std::size_t h = rp.block_size(b);
      out.emplace_back(s.data().submatrix(rp.block_offset(b), 0, h, s.cols()),
                       Partition::trivial(h), s.col_partition());
    }
  } else {
    const auto& cp = s.col_partition();
    for (std::size_t b = 0; b < cp.block_count(); ++b) {
      const std::size_t w = cp.block_size(b);
      out.emplace_back(s.data().submatrix(0, cp.block_offset(b), s.rows(), w),
                       s.row_partition(), Partition::trivial(w));
    }
  }
  return out;
}

SuperMatrix join_strips(std::span<const SuperMatrix> parts, Axis axis) {
  if (parts.empty()) throw Error(ErrorKind::ZeroDimension, "no strips to join");
  std::vector<DenseMatrix> data;
  std::vector<std::ptrdiff_t> seams;
  std::ptrdiff_t extent = 0;
  const Partition& shared =
      axis == Axis::Row ? parts.front().col_partition() : parts.front().row_partition();
  for (const auto& p : parts) {
    const Partition& cross = axis == Axis::Row ? p.col_partition() : p.row_partition();
    const Partition& along = axis == Axis::Row ? p.row_partition() : p.col_partition();
    if (cross != shared) {
      throw Error(ErrorKind::PartitionMismatch, "strips disagree on the shared partition");
    }
    if (!along.is_trivial()) {
      throw Error(ErrorKind::PartitionMismatch, "strip is partitioned along the join axis");
    }
    if (extent > 0) seams.push_back(extent);
    extent += static_cast<std::ptrdiff_t>(along.length());
    data.push_back(p.data());
  }
  if (axis == Axis::Row) {
    auto stacked = vstack(data);
    auto rp = Partition::make(stacked.rows(), seams);
    return SuperMatrix(std::move(stacked), std::move(rp), shared);
  }
  auto stacked = hstack(data);
  auto cp = Partition::make(stacked.cols(), seams);
  return SuperMatrix(std::move(stacked), shared, std::move(cp));
}

}  // namespace smx
