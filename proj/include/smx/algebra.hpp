#pragma once

#include "smx/rational.hpp"
#include "smx/super_matrix.hpp"

namespace smx {

// Same entries; partitions ignored.
bool value_eq(const SuperMatrix& a, const SuperMatrix& b);
// Same entries and identical row/column partitions.
bool strict_eq(const SuperMatrix& a, const SuperMatrix& b);

// Entrywise sum. Requires equal dimensions (DimensionMismatch) and identical
// partitions (PartitionMismatch).
SuperMatrix add(const SuperMatrix& a, const SuperMatrix& b);
// add(a, scale(-1, b)).
SuperMatrix sub(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix scale(const Rational& lambda, const SuperMatrix& a);

// Entries transposed, row and column cut lists swapped (the dual partition).
SuperMatrix transpose(const SuperMatrix& a);

// The partition shared by the left factor's columns and the right factor's
// rows, plus the outer partitions the product inherits.
struct ProductWitness {
  Partition inner_partition;
  Partition left_row_partition;
  Partition right_col_partition;
};

struct SuperProduct {
  SuperMatrix product;
  ProductWitness witness;
};

// Block product. Requires a.cols() == b.rows() and the column partition of `a`
// identical to the row partition of `b`. The result carries a's row partition
// and b's column partition, which covers the minor product (row x column
// supervector, simple result) and the major product (column x row supervector,
// fully partitioned result) alike.
SuperProduct super_mul(const SuperMatrix& a, const SuperMatrix& b);

enum class Side { Right, Left };

// Right: A * A^T. Left: A^T * A. Always square and symmetric, with equal row
// and column partitions.
SuperMatrix gram(const SuperMatrix& a, Side side);

}  // namespace smx
