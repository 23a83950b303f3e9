#include "smx/classify.hpp"

#include <algorithm>

namespace smx {

const char* to_string(ComponentShape shape) noexcept {
  switch (shape) {
    case ComponentShape::Simple: return "simple";
    case ComponentShape::RowSupervector: return "row_supervector";
    case ComponentShape::ColumnSupervector: return "column_supervector";
    case ComponentShape::GeneralSuper: return "general_super";
  }
  return "unknown";
}

const char* to_string(SymmetryClass symmetry) noexcept {
  switch (symmetry) {
    case SymmetryClass::Symmetric: return "symmetric";
    case SymmetryClass::QuasiSymmetric: return "quasi_symmetric";
    case SymmetryClass::None: return "none";
  }
  return "unknown";
}

std::string to_string(const SizeClass& size) {
  switch (size.kind) {
    case SizeClass::Kind::Square: return "square(" + std::to_string(size.rows) + ")";
    case SizeClass::Kind::MixedSquare: return "mixed_square";
    case SizeClass::Kind::Rectangular:
      return "rectangular(" + std::to_string(size.rows) + "," + std::to_string(size.cols) + ")";
    case SizeClass::Kind::MixedRectangular: return "mixed_rectangular";
    case SizeClass::Kind::Mixed: return "mixed";
  }
  return "unknown";
}

std::vector<std::string> UnionShape::labels() const {
  std::vector<std::string> out;
  if (row_n_vector) out.emplace_back("row_n_vector");
  if (special_row_n_vector) out.emplace_back("special_row_n_vector");
  if (column_n_vector) out.emplace_back("column_n_vector");
  if (special_column_n_vector) out.emplace_back("special_column_n_vector");
  out.push_back(to_string(size));
  return out;
}

ComponentShape shape_class(const SuperMatrix& s) {
  const bool rows_cut = !s.row_partition().is_trivial();
  const bool cols_cut = !s.col_partition().is_trivial();
  if (rows_cut && cols_cut) return ComponentShape::GeneralSuper;
  if (cols_cut) return ComponentShape::RowSupervector;
  if (rows_cut) return ComponentShape::ColumnSupervector;
  return ComponentShape::Simple;
}

bool is_symmetric_super(const SuperMatrix& s) {
  return s.data().is_symmetric() && s.row_partition() == s.col_partition();
}

SizeClass size_class(const SuperNMatrix& u) {
  const auto& c = u.components();
  const auto square = [](const SuperMatrix& m) { return m.rows() == m.cols(); };
  const bool all_square = std::all_of(c.begin(), c.end(), square);
  const bool none_square = std::none_of(c.begin(), c.end(), square);
  const bool same_order = std::all_of(c.begin(), c.end(), [&](const SuperMatrix& m) {
    return m.rows() == c.front().rows() && m.cols() == c.front().cols();
  });
  const std::size_t r = c.front().rows();
  const std::size_t k = c.front().cols();
  if (all_square) {
    return same_order ? SizeClass{SizeClass::Kind::Square, r, k}
                      : SizeClass{SizeClass::Kind::MixedSquare};
  }
  if (none_square) {
    return same_order ? SizeClass{SizeClass::Kind::Rectangular, r, k}
                      : SizeClass{SizeClass::Kind::MixedRectangular};
  }
  return SizeClass{SizeClass::Kind::Mixed};
}

UnionShape union_shape(const SuperNMatrix& u) {
  const auto& c = u.components();
  UnionShape shape;
  shape.size = size_class(u);

  // Simple components ride along with whichever orientation the partitioned
  // ones agree on; a union with no cuts at all has no orientation.
  const bool any_row_cuts = std::any_of(
      c.begin(), c.end(), [](const SuperMatrix& m) { return !m.row_partition().is_trivial(); });
  const bool any_col_cuts = std::any_of(
      c.begin(), c.end(), [](const SuperMatrix& m) { return !m.col_partition().is_trivial(); });
  shape.row_n_vector = any_col_cuts && !any_row_cuts;
  shape.column_n_vector = any_row_cuts && !any_col_cuts;

  shape.special_row_n_vector =
      shape.row_n_vector &&
      std::all_of(c.begin(), c.end(), [](const SuperMatrix& m) { return m.cols() > m.rows(); });
  shape.special_column_n_vector =
      shape.column_n_vector &&
      std::all_of(c.begin(), c.end(), [](const SuperMatrix& m) { return m.rows() > m.cols(); });
  return shape;
}

SymmetryClass symmetry_class(const SuperNMatrix& u) {
  const auto& c = u.components();
  const auto count = std::count_if(c.begin(), c.end(), is_symmetric_super);
  if (static_cast<std::size_t>(count) == c.size()) return SymmetryClass::Symmetric;
  if (count > 0) return SymmetryClass::QuasiSymmetric;
  return SymmetryClass::None;
}

ClassReport union_class(const SuperNMatrix& u) {
  ClassReport report;
  report.arity = u.arity();
  for (const auto& m : u.components()) report.component_shapes.push_back(shape_class(m));
  report.union_shape = union_shape(u);
  report.symmetry = symmetry_class(u);
  report.semi_super = is_semi_super(u);
  report.proper = is_proper(u);
  return report;
}

}  // namespace smx
