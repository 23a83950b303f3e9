#pragma once

// Worked examples transcribed from the source text. Cut lists are 0-based
// positions between entries: a bar after column 2 is cut 2.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "smx/super_matrix.hpp"
#include "smx/union.hpp"

namespace fx {

using smx::DenseMatrix;
using smx::SuperMatrix;
using smx::SuperNMatrix;
using Rows = std::initializer_list<std::initializer_list<std::int64_t>>;
using Cuts = std::vector<std::ptrdiff_t>;

inline SuperMatrix sm(Rows rows, Cuts row_cuts = {}, Cuts col_cuts = {}) {
  return smx::make_super(DenseMatrix::from_rows(rows), row_cuts, col_cuts);
}

inline DenseMatrix dm(Rows rows) { return DenseMatrix::from_rows(rows); }

inline SuperNMatrix un(std::vector<SuperMatrix> parts) { return SuperNMatrix(std::move(parts)); }

// --- 1.1 ------------------------------------------------------------------

inline DenseMatrix ex1_1_2_entries() {
  return dm({{3, 0, 1, 1, 2, 0},
             {1, 0, 0, 3, 5, 2},
             {5, -1, 6, 7, 8, 4},
             {0, 9, 1, 2, 0, -1},
             {2, 5, 2, 3, 4, 6},
             {1, 6, 1, 2, 3, 9}});
}
// A3: one horizontal line under row 4, one vertical line after column 2.
inline SuperMatrix ex1_1_2_a3() {
  return smx::make_super(ex1_1_2_entries(), {4}, {2});
}

inline SuperMatrix ex1_1_4() {
  return sm({{4, 3, 2, 7}, {3, 6, 1, 4}, {2, 1, 5, 2}, {7, 4, 2, 7}}, {2}, {2});
}

inline DenseMatrix ex1_1_11_entries() {
  return dm({{3, 6, 0, 4, 5}, {2, 1, 6, 3, 0}, {1, 1, 1, 2, 1}, {0, 1, 0, 1, 0}, {2, 0, 1, 2, 1}});
}

inline SuperMatrix ex1_1_13() {
  return sm({{2, 1, 3, 5, 6},
             {0, 2, 0, 1, 1},
             {1, 1, 1, 0, 2},
             {2, 2, 0, 1, 1},
             {5, 6, 1, 0, 1},
             {2, 0, 0, 0, 4},
             {1, 0, 1, 1, 5}},
            {3, 5}, {3});
}

inline SuperMatrix ex1_1_15_t() {
  return sm({{3, 0, 1, 1, 5, 2}, {4, 2, 0, 1, 3, 5}, {1, 0, 1, 0, 1, 6}}, {}, {4});
}

inline SuperMatrix ex1_1_16_a() { return sm({{3, 0, 1}, {1, 2, 7}, {4, 3, 6}}, {2}, {2}); }
inline SuperMatrix ex1_1_16_b() { return sm({{2, 1, 3}, {5, 4, 1}, {2, 0, 2}}, {1}, {1}); }

// Column supervectors V_a, V_b, each cut after entries 3 and 7.
inline SuperMatrix ex1_1_17_va() {
  return sm({{0}, {1}, {2}, {4}, {0}, {1}, {-1}, {1}, {2}}, {3, 7});
}
inline SuperMatrix ex1_1_17_vb() {
  return sm({{1}, {-1}, {0}, {-4}, {1}, {2}, {0}, {-1}, {1}}, {3, 7});
}

inline SuperMatrix ex1_1_21_a() { return sm({{2, 1}, {3, 5}, {6, 1}}, {}, {1}); }
inline SuperMatrix ex1_1_21_b() { return sm({{1, 2}, {3, 1}}, {1}, {}); }

inline SuperMatrix ex1_1_22_x() {
  return sm({{2, 3, 4, 2, 2, 2}, {-1, 1, 1, 1, 0, 1}, {0, 0, 2, -4, 0, 0}}, {}, {2, 3});
}
inline SuperMatrix ex1_1_22_y() {
  return sm({{2, 0}, {1, 1}, {2, 1}, {5, 3}, {1, -1}, {0, 2}}, {2, 3}, {});
}

inline SuperMatrix ex1_1_23_x() {
  return sm({{2, 3, 4, 3, 4, 5, 0}, {1, 4, 1, 1, 1, -1, 6}, {2, 1, 2, 0, 2, 1, 1}}, {}, {2, 3});
}

// Printed as Y^T with column cuts [3,4]; Y is its transpose.
inline SuperMatrix ex1_1_24_yt() {
  return sm({{2, 3, 1, 0, 1, 2, 1, 5, 1}, {0, 1, 5, 2, 0, 3, 0, 1, 0}}, {}, {3, 4});
}

// --- 1.2 ------------------------------------------------------------------

inline SuperNMatrix ex1_2_5() {
  return un({sm({{2, 0, 1}, {3, 3, -1}}), sm({{0, 1, -1}, {2, 1, 0}})});
}

// --- Chapter 2 ------------------------------------------------------------

inline SuperNMatrix ex2_2() {
  const Rows entries = {{3, 0, 1, 2}, {0, 1, 0, 3}, {1, 1, 5, 2}, {0, 0, 2, -1}};
  return un({sm(entries, {2}, {2}), sm(entries, {2}, {3})});
}

inline SuperNMatrix ex2_3() {
  const Rows entries = {{3, 0, 1}, {2, 1, 1}, {5, 2, 0}};
  return un({sm(entries, {2}, {1}), sm(entries, {2}, {1})});
}

inline SuperNMatrix ex2_11_a() {
  return un({sm({{3, 1, 2, 0, 1, 5, 1}}, {}, {3}), sm({{3, 0, 1}, {2, 1, 1}}, {}, {2})});
}
inline SuperNMatrix ex2_11_b() {
  return un({sm({{0, -1, 0, 1, 0, -1, 5}}, {}, {3}), sm({{0, 0, 1}, {-2, 0, 5}}, {}, {2})});
}
inline SuperNMatrix ex2_11_sum() {
  return un({sm({{3, 0, 2, 1, 1, 4, 6}}, {}, {3}), sm({{3, 0, 2}, {0, 1, 6}}, {}, {2})});
}

inline SuperNMatrix ex2_12_a() {
  return un({sm({{3, 1, 1, 2}}, {}, {3}), sm({{0, 1}, {5, 2}}, {}, {1})});
}
inline SuperNMatrix ex2_12_b() {
  return un({sm({{3, 1, 1, 2}}, {}, {1}), sm({{0, 1}, {5, 2}}, {}, {1})});
}

inline SuperNMatrix ex2_13() {
  return un({sm({{3, 2}, {1, 0}, {0, 5}}, {}, {1}),
             sm({{1, 1, 3, 0, 2}, {3, 0, 5, 2, -1}, {1, 1, 3, 2, -5}}, {2}, {2})});
}
inline SuperNMatrix ex2_13_times8() {
  return un({sm({{24, 16}, {8, 0}, {0, 40}}, {}, {1}),
             sm({{8, 8, 24, 0, 16}, {24, 0, 40, 16, -8}, {8, 8, 24, 16, -40}}, {2}, {2})});
}

inline SuperNMatrix ex2_15() {
  return un({sm({{3, 0, 1, 1, -1, 5, 2, 3, 1}}, {}, {4}),
             sm({{1, 0, 1, 5, 2, 0, 1, 1, 1, 0, 2}}, {}, {3, 6})});
}

inline SuperNMatrix ex2_20() {
  return un({sm({{3, 1, 1, 2}, {0, 5, 1, 0}}),
             sm({{3, 1, 2, 0}, {5, 1, 1, 1}, {2, 0, 2, 6}, {1, 0, 1, 5}}, {2}, {1})});
}

inline SuperNMatrix ex2_39_a() {
  return un({sm({{2, 0, 3, 0, 1, 4}, {1, 1, 1, 1, 0, 1}, {1, 2, 0, 1, 1, 0}}, {}, {2, 5}),
             sm({{3, 1, 0, 3, 3, 0, 1},
                 {4, 5, 1, 1, 0, 1, 1},
                 {3, 4, 1, 0, 1, 0, 1},
                 {1, 2, 2, 4, 2, 5, 6}},
                {}, {3})});
}
inline SuperNMatrix ex2_39_b() {
  return un({sm({{0, 1}, {3, 0}, {1, 0}, {1, 1}, {2, 0}, {0, 1}}, {2, 5}, {}),
             sm({{1, 0, 3}, {3, 1, 1}, {5, 1, 2}, {1, 1, 0}, {0, 1, 1}, {1, 0, 0}, {0, 1, 0}},
                {3}, {})});
}
inline SuperNMatrix ex2_39_product() {
  return un({sm({{5, 6}, {5, 3}, {9, 2}}),
             sm({{9, 8, 13}, {26, 8, 19}, {20, 7, 16}, {26, 16, 11}})});
}

inline SuperMatrix ex2_41_a1() {
  return sm({{3, 0, 1, 2, 1, 3, 3, 2, 1}, {1, 1, 1, 3, 1, 0, 1, 1, 0}, {2, 1, 1, 4, 1, 0, 0, 1, 0}},
            {}, {3, 5});
}

inline SuperMatrix ex2_42_a1() {
  return sm({{1, 0, 1, 1},
             {2, 1, 2, 0},
             {0, 1, 0, 1},
             {3, 1, 2, 5},
             {1, 2, 3, 4},
             {5, 6, 7, 8},
             {0, 1, 2, 3},
             {1, 1, 0, 5},
             {2, 5, 7, 1}},
            {3}, {});
}

inline SuperNMatrix ex2_45() {
  return un({sm({{3, 1, 0}, {-1, 1, 6}, {0, 1, 1}, {2, 1, 0}, {1, 2, 3}, {1, 0, 1}, {0, 1, 0}, {1, 0, 1}},
                {3}, {}),
             sm({{2, 1, 0, 4}, {1, 1, 6, 0}, {0, 0, 1, 1}, {1, 0, 1, 1}, {0, 5, 2, 3}, {1, 1, 0, 1}, {2, 0, 2, 1}},
                {3, 6}, {})});
}
inline SuperNMatrix ex2_45_right_gram() {
  return un({sm({{10, -2, 1, 7, 5, 3, 1, 3},
                 {-2, 38, 7, -1, 19, 5, 1, 5},
                 {1, 7, 2, 1, 5, 1, 1, 1},
                 {7, -1, 1, 5, 4, 2, 1, 2},
                 {5, 19, 5, 4, 14, 4, 2, 4},
                 {3, 5, 1, 2, 4, 2, 0, 2},
                 {1, 1, 1, 1, 2, 0, 1, 0},
                 {3, 5, 1, 2, 4, 2, 0, 2}},
                {3}, {3}),
             sm({{21, 3, 4, 6, 17, 7, 8},
                 {3, 38, 6, 7, 17, 2, 14},
                 {4, 6, 2, 2, 5, 1, 3},
                 {6, 7, 2, 3, 5, 2, 5},
                 {17, 17, 5, 5, 38, 8, 7},
                 {7, 2, 1, 2, 8, 3, 3},
                 {8, 14, 3, 5, 7, 3, 9}},
                {3, 6}, {3, 6})});
}

inline SuperNMatrix ex2_63() {
  return un({sm({{3, 0, 2, 4}, {1, 1, 0, 1}, {2, 2, 1, 0}, {6, 0, 0, 2}, {1, 1, 0, 1}}),
             sm({{0, 1, 2, 3, 4, 1},
                 {2, 3, 4, 1, 0, 0},
                 {3, 4, 1, 0, 1, 0},
                 {4, 1, 0, 1, 0, 3},
                 {1, 0, 1, 0, 3, 4},
                 {0, 1, 0, 1, 0, 1},
                 {1, 0, 1, 0, 1, 0},
                 {1, 1, 1, 0, 0, 1}},
                {5}, {2, 4})});
}
inline DenseMatrix ex2_63_a1_left_gram() {
  return dm({{51, 6, 8, 26}, {6, 6, 2, 2}, {8, 2, 5, 8}, {26, 2, 8, 22}});
}
inline DenseMatrix ex2_63_a1_right_gram() {
  return dm({{29, 7, 8, 26, 7}, {7, 3, 4, 8, 3}, {8, 4, 9, 12, 4}, {26, 8, 12, 40, 8}, {7, 3, 4, 8, 3}});
}

// --- Chapter 3 ------------------------------------------------------------

inline SuperNMatrix ex3_30_t() {
  return un({sm({{3, 0, 5, 1, 0, 2, 3}}, {}, {2, 6}),
             sm({{1, 1, 0, 1, 2, 3}, {0, 2, 6, 0, 4, 5}}, {}, {1, 3}),
             sm({{1, 2, 3, 2, 0, 1, 3, 2, 1}, {1, 1, 0, 1, 5, 0, 1, 0, 1}, {1, 1, 5, 0, 4, 0, 7, 3, 0}},
                {}, {3, 7})});
}
inline SuperNMatrix ex3_30_s() {
  return un({sm({{2, 1}, {1, 0}, {1, 2}, {2, 1}, {3, 4}, {4, 3}, {1, 0}}, {2, 6}, {}),
             sm({{1, 2, 3, 4}, {0, 1, 2, 5}, {1, 3, 0, 1}, {1, 1, 0, 2}, {2, 0, 2, 1}, {5, 1, 0, 2}},
                {1, 3}, {}),
             sm({{1, 0, 1, 1, 1},
                 {0, 1, 0, 1, 0},
                 {2, 0, 1, 2, 0},
                 {1, 0, 1, 0, 0},
                 {0, 0, 0, 1, 0},
                 {1, 0, 0, 0, 1},
                 {0, 1, 1, 1, 0},
                 {3, 1, 0, 0, 1},
                 {1, 0, 1, 0, 1}},
                {3, 7}, {})});
}
inline SuperNMatrix ex3_30_product() {
  return un({sm({{24, 20}}),
             sm({{21, 7, 9, 19}, {39, 25, 12, 30}}),
             sm({{17, 7, 10, 12, 5}, {3, 2, 4, 8, 2}, {20, 11, 13, 23, 4}})});
}

inline SuperMatrix ex3_36_t2() {
  return sm({{0, 1, 2, 3, 0, 6},
             {1, 2, 1, 0, 1, 2},
             {2, 1, 9, 6, 0, 3},
             {3, 0, 6, 1, 2, 1},
             {0, 1, 0, 2, 5, 8},
             {6, 2, 3, 1, 8, 7}},
            {4}, {2});
}

inline SuperNMatrix ex3_38() {
  return un({sm({{1, 1, 0, 2, 3}, {1, 7, 9, 0, 6}, {0, 9, 1, 2, 1}, {2, 0, 2, 0, 2}, {3, 6, 1, 1, 1}},
                {2}, {2}),
             sm({{4, 1, 0, 2, 3, 1},
                 {1, 0, 8, 9, 6, 3},
                 {0, 8, 7, 1, 2, 3},
                 {2, 9, 1, 2, 0, 1},
                 {3, 6, 2, 0, 5, 3},
                 {1, 3, 3, 1, 3, 0}},
                {3}, {3}),
             sm({{3, 1, 0, 1, 3, 1},
                 {1, 2, 1, 2, 3, 4},
                 {0, 1, 5, 1, 2, 3},
                 {1, 2, 1, 0, 1, 2},
                 {3, 3, 2, 1, 7, 5},
                 {1, 4, 3, 2, 5, 3}},
                {3}, {3})});
}

// --- Chapter 4 ------------------------------------------------------------

inline SuperNMatrix ex4_3() {
  return un({sm({{0, 1, 0, 1, 2, 3, 4}}, {}, {1, 4}),
             sm({{1, 2, 3, 4, 5, 5, 7, 8, 9, 0}}, {}, {1, 5, 8}),
             sm({{0, 1, 3, 4, 5, 7, 8, 9, 10}}, {}, {3, 5}),
             sm({{6, 1, 2, 3, 0, 1, 4, 6, 1}}, {}, {1, 3}),
             sm({{3, 1, 0, 2, 2, 5, 0, 1}}, {}, {3}),
             sm({{1, 2, 3, 4, 5, 6, 7, 1, 8, 1}}, {}, {1, 3, 6})});
}

inline SuperNMatrix ex4_5() {
  return un({sm({{2, 1}, {0, 1}}, {}, {1}),
             sm({{1, 1}, {0, 2}}, {}, {1}),
             sm({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, {1}, {1}),
             sm({{1, 2, 3, 4}, {0, 1, 2, 5}, {7, 8, 1, 0}, {9, 6, 4, 2}}, {2}, {3}),
             sm({{1, 2, 0, 1, 1}, {0, 1, 2, 0, 1}, {1, 4, 0, 1, 3}, {2, 5, 1, 2, 1}, {3, 6, 1, 0, 0}},
                {2}, {1, 4})});
}

inline SuperNMatrix ex4_6() {
  return un({sm({{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 0, 1, 2}, {3, 4, 5, 6}}, {1}, {3}),
             sm({{0, 1, 2, 3}, {1, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 0, 1}}, {3}, {2}),
             sm({{1, 2, 3, 4}, {0, 1, 0, 1}, {1, 1, 1, 1}, {1, 1, 0, 0}}, {1}, {1}),
             sm({{1, 0, 2, 4}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}}, {2}, {3})});
}

inline SuperNMatrix ex4_11() {
  return un({sm({{2, 1, 4, 1}, {0, 3, 1, 5}, {1, 2, 3, 4}, {5, 6, 7, 8}, {9, 0, 1, 8}, {1, 1, 1, 4}, {4, 4, 1, 2}},
                {1, 3}, {2}),
             sm({{3, 1, 1}, {0, 2, 4}, {1, 3, 1}, {1, 4, 6}, {7, 8, 9}, {1, 0, 4}, {4, 1, 2}, {1, 1, 6}},
                {1, 3, 7}, {}),
             sm({{1, 2, 3, 4, 5}, {6, 7, 8, 9, 0}, {3, 2, 1, 4, 8}, {1, 1, 1, 4, 1}, {7, 0, 8, 1, 3}, {3, 1, 2, 5, 6}, {1, 1, 0, 1, 1}},
                {1, 4}, {3}),
             sm({{1, 2, 3, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}, {2, 1, 1, 1}, {4, 2, 3, 1}, {1, 1, 0, 1}, {1, 5, 0, 3}, {1, 7, 2, 3}},
                {1, 4}, {})});
}

inline SuperNMatrix ex4_14() {
  return un({sm({{3, 10}, {10, 1}}, {1}, {1}),
             sm({{3, 1, 1}, {1, 0, 1}, {1, 1, 8}}, {1}, {1}),
             sm({{1, 2, 0, 4}, {2, 1, 5, 2}, {0, 5, 1, 6}, {4, 2, 6, 4}}, {1}, {1}),
             sm({{1, 2, 3}, {2, 5, 7}, {3, 7, 1}}, {2}, {2}),
             sm({{1, 2, 3, 4, 5, 6},
                 {2, 0, 1, 1, 0, 1},
                 {3, 1, 2, 7, 1, 2},
                 {4, 1, 7, 0, 3, 5},
                 {5, 0, 1, 3, 1, 2},
                 {6, 1, 2, 5, 2, 0}},
                {2, 5}, {2, 5})});
}

inline SuperNMatrix ex4_15() {
  return un({sm({{3, 1, 2, 0}, {1, 1, 0, 1}, {2, 0, 5, 7}, {0, 1, 7, 0}}, {2}, {2}),
             sm({{7, 8, 1, 0, 1}, {8, 1, 5, 1, 3}, {1, 5, 1, 0, 1}, {0, 1, 0, 2, 5}, {1, 3, 1, 5, 0}},
                {4}, {4}),
             sm({{3, 4}, {5, 7}}, {1}, {1}),
             sm({{1, 2, 1, 0}, {2, 1, 1, 2}, {1, 1, 3, 0}, {0, 2, 0, 3}}, {1}, {3}),
             sm({{1, 1, 1, 0, 1, 0},
                 {1, 2, 0, 1, 0, 0},
                 {1, 0, 5, 3, 1, 2},
                 {0, 1, 3, 0, 1, 7},
                 {1, 0, 1, 1, 0, 1},
                 {0, 0, 2, 7, 1, 0}},
                {2}, {2}),
             sm({{1, 0, 1, 3, 5}, {0, 1, 2, 0, 1}, {1, 2, 7, 2, 5}, {3, 0, 2, 1, 3}, {5, 1, 5, 3, 0}},
                {3}, {2})});
}

inline SuperNMatrix ex4_16() {
  return un({sm({{3, 1, 2, 5, 6}, {1, 3, 0, 1, 1}, {2, 0, 2, 1, 0}, {5, 1, 3, 2, 1}, {6, 1, 4, 5, 6}},
                {4}, {2}),
             sm({{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 0, 1}, {3, 0, 1, 0, 5, 7}}, {2}, {4}),
             sm({{2, 1}, {0, 3}, {1, 2}}),
             sm({{3, 1, 2, 1, 5}, {1, 0, 1, 3, 2}, {3, 1, 3, 5, 7}, {0, 2, 4, 0, 6}}, {3}, {4})});
}

}  // namespace fx
