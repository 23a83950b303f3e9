#pragma once

#include <cstddef>
#include <vector>

#include "smx/algebra.hpp"

namespace smx {

// Ordered components A_1 ∪ ... ∪ A_n, n >= 1. n = 2 is a bimatrix, n = 3 a
// trimatrix. Pairwise distinctness is not enforced here; see is_proper().
class SuperNMatrix {
 public:
  // EmptyUnion when `components` is empty.
  explicit SuperNMatrix(std::vector<SuperMatrix> components);

  std::size_t arity() const noexcept { return components_.size(); }
  const std::vector<SuperMatrix>& components() const noexcept { return components_; }
  // 1-based.
  const SuperMatrix& component(std::size_t i) const;

 private:
  std::vector<SuperMatrix> components_;
};

SuperNMatrix make_union(std::vector<SuperMatrix> components);

// True when n == 1, when every pair differs in entries or partitions, or when
// every component is a zero matrix.
bool is_proper(const SuperNMatrix& u);

// At least one partitioned component and at least one simple component.
bool is_semi_super(const SuperNMatrix& u);

// Componentwise equality; unions of different arity are never equal.
bool union_strict_eq(const SuperNMatrix& u, const SuperNMatrix& v);
bool union_value_eq(const SuperNMatrix& u, const SuperNMatrix& v);

// Lifted operations. Binary ones throw ArityMismatch when n differs; failures
// inside a component are rethrown tagged with that component's 1-based index.
SuperNMatrix union_add(const SuperNMatrix& u, const SuperNMatrix& v);
SuperNMatrix union_sub(const SuperNMatrix& u, const SuperNMatrix& v);
SuperNMatrix union_scale(const Rational& lambda, const SuperNMatrix& u);
SuperNMatrix union_transpose(const SuperNMatrix& u);
SuperNMatrix union_mul(const SuperNMatrix& u, const SuperNMatrix& v);
SuperNMatrix union_gram(const SuperNMatrix& u, Side side);
SuperNMatrix union_flatten(const SuperNMatrix& u);

}  // namespace smx
