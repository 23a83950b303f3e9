#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smx/union.hpp"

namespace smx {

enum class ComponentShape { Simple, RowSupervector, ColumnSupervector, GeneralSuper };

// Matrix-size family of a whole union. `rows`/`cols` are meaningful only for
// Square (rows == cols == t) and Rectangular (m x t).
struct SizeClass {
  enum class Kind { Square, MixedSquare, Rectangular, MixedRectangular, Mixed };
  Kind kind = Kind::Mixed;
  std::size_t rows = 0;
  std::size_t cols = 0;

  friend bool operator==(const SizeClass&, const SizeClass&) = default;
};

// Every union-level shape label that applies. The orientation flags nest:
// special_row implies row_n_vector, special_column implies column_n_vector.
struct UnionShape {
  bool row_n_vector = false;
  bool column_n_vector = false;
  bool special_row_n_vector = false;
  bool special_column_n_vector = false;
  SizeClass size;

  // Labels in a fixed order: orientation labels first, the size label last.
  std::vector<std::string> labels() const;

  friend bool operator==(const UnionShape&, const UnionShape&) = default;
};

enum class SymmetryClass { Symmetric, QuasiSymmetric, None };

struct ClassReport {
  std::size_t arity = 0;
  std::vector<ComponentShape> component_shapes;
  UnionShape union_shape;
  SymmetryClass symmetry = SymmetryClass::None;
  bool semi_super = false;
  bool proper = false;
};

const char* to_string(ComponentShape shape) noexcept;
const char* to_string(SymmetryClass symmetry) noexcept;
// "square(4)", "rectangular(2,3)", "mixed_square", ...
std::string to_string(const SizeClass& size);

// Simple: no cuts. RowSupervector: column cuts only. ColumnSupervector: row
// cuts only. GeneralSuper: both.
ComponentShape shape_class(const SuperMatrix& s);

// Square, symmetric entries, and row partition == column partition.
bool is_symmetric_super(const SuperMatrix& s);

SizeClass size_class(const SuperNMatrix& u);
UnionShape union_shape(const SuperNMatrix& u);

// Symmetric: every component passes is_symmetric_super. QuasiSymmetric: at
// least one does. None otherwise.
SymmetryClass symmetry_class(const SuperNMatrix& u);

ClassReport union_class(const SuperNMatrix& u);

}  // namespace smx
