#include "smx/union.hpp"

#include <algorithm>
#include <string>

#include "smx/error.hpp"

namespace smx {

SuperNMatrix::SuperNMatrix(std::vector<SuperMatrix> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(ErrorKind::EmptyUnion, "a union needs at least one component");
  }
}

const SuperMatrix& SuperNMatrix::component(std::size_t i) const {
  if (i < 1 || i > components_.size()) {
    throw Error(ErrorKind::BlockIndexOutOfRange,
                "component " + std::to_string(i) + " of " + std::to_string(components_.size()));
  }
  return components_[i - 1];
}

SuperNMatrix make_union(std::vector<SuperMatrix> components) {
  return SuperNMatrix(std::move(components));
}

bool is_proper(const SuperNMatrix& u) {
  const auto& c = u.components();
  if (c.size() == 1) return true;
  if (std::all_of(c.begin(), c.end(), [](const SuperMatrix& m) { return m.data().is_zero(); })) {
    return true;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (strict_eq(c[i], c[j])) return false;
    }
  }
  return true;
}

bool is_semi_super(const SuperNMatrix& u) {
  const auto& c = u.components();
  const auto simple = [](const SuperMatrix& m) { return m.is_simple(); };
  return std::any_of(c.begin(), c.end(), simple) && !std::all_of(c.begin(), c.end(), simple);
}

namespace {

template <typename Op>
SuperNMatrix lift(const SuperNMatrix& u, Op op) {
  std::vector<SuperMatrix> out;
  out.reserve(u.arity());
  for (std::size_t i = 0; i < u.arity(); ++i) {
    try {
      out.push_back(op(u.components()[i]));
    } catch (const Error& e) {
      throw e.at_component(i + 1);
    }
  }
  return SuperNMatrix(std::move(out));
}

template <typename Op>
SuperNMatrix lift2(const SuperNMatrix& u, const SuperNMatrix& v, Op op) {
  if (u.arity() != v.arity()) {
    throw Error(ErrorKind::ArityMismatch,
                std::to_string(u.arity()) + " components vs " + std::to_string(v.arity()));
  }
  std::vector<SuperMatrix> out;
  out.reserve(u.arity());
  for (std::size_t i = 0; i < u.arity(); ++i) {
    try {
      out.push_back(op(u.components()[i], v.components()[i]));
    } catch (const Error& e) {
      throw e.at_component(i + 1);
    }
  }
  return SuperNMatrix(std::move(out));
}

template <typename Pred>
bool all_pairs(const SuperNMatrix& u, const SuperNMatrix& v, Pred pred) {
  if (u.arity() != v.arity()) return false;
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (!pred(u.components()[i], v.components()[i])) return false;
  }
  return true;
}

}  // namespace

bool union_strict_eq(const SuperNMatrix& u, const SuperNMatrix& v) {
  return all_pairs(u, v, [](const SuperMatrix& a, const SuperMatrix& b) { return strict_eq(a, b); });
}

bool union_value_eq(const SuperNMatrix& u, const SuperNMatrix& v) {
  return all_pairs(u, v, [](const SuperMatrix& a, const SuperMatrix& b) { return value_eq(a, b); });
}

SuperNMatrix union_add(const SuperNMatrix& u, const SuperNMatrix& v) {
  return lift2(u, v, [](const SuperMatrix& a, const SuperMatrix& b) { return add(a, b); });
}

SuperNMatrix union_sub(const SuperNMatrix& u, const SuperNMatrix& v) {
  return lift2(u, v, [](const SuperMatrix& a, const SuperMatrix& b) { return sub(a, b); });
}

SuperNMatrix union_scale(const Rational& lambda, const SuperNMatrix& u) {
  return lift(u, [&](const SuperMatrix& a) { return scale(lambda, a); });
}

SuperNMatrix union_transpose(const SuperNMatrix& u) {
  return lift(u, [](const SuperMatrix& a) { return transpose(a); });
}

SuperNMatrix union_mul(const SuperNMatrix& u, const SuperNMatrix& v) {
  return lift2(u, v,
               [](const SuperMatrix& a, const SuperMatrix& b) { return super_mul(a, b).product; });
}

SuperNMatrix union_gram(const SuperNMatrix& u, Side side) {
  return lift(u, [side](const SuperMatrix& a) { return gram(a, side); });
}

SuperNMatrix union_flatten(const SuperNMatrix& u) {
  return lift(u, [](const SuperMatrix& a) { return SuperMatrix(flatten(a)); });
}

}  // namespace smx
