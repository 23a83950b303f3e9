#include "smx/algebra.hpp"

#include <string>
#include <vector>

#include "smx/error.hpp"

namespace smx {

namespace {

std::string cuts_text(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.cuts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.cuts()[i]);
  }
  return s + "]";
}

void require_same_shape(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (a.row_partition() != b.row_partition()) {
    throw Error(ErrorKind::PartitionMismatch, "row cuts " + cuts_text(a.row_partition()) +
                                                  " vs " + cuts_text(b.row_partition()));
  }
  if (a.col_partition() != b.col_partition()) {
    throw Error(ErrorKind::PartitionMismatch, "column cuts " + cuts_text(a.col_partition()) +
                                                  " vs " + cuts_text(b.col_partition()));
  }
}

}  // namespace

bool value_eq(const SuperMatrix& a, const SuperMatrix& b) { return a.data() == b.data(); }

bool strict_eq(const SuperMatrix& a, const SuperMatrix& b) {
  return value_eq(a, b) && a.row_partition() == b.row_partition() &&
         a.col_partition() == b.col_partition();
}

SuperMatrix add(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_shape(a, b);
  const auto x = a.data().entries();
  const auto y = b.data().entries();
  std::vector<Rational> sum;
  sum.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sum.push_back(x[i] + y[i]);
  return SuperMatrix(DenseMatrix(a.rows(), a.cols(), std::move(sum)), a.row_partition(),
                     a.col_partition());
}

SuperMatrix sub(const SuperMatrix& a, const SuperMatrix& b) {
  return add(a, scale(Rational(-1), b));
}

SuperMatrix scale(const Rational& lambda, const SuperMatrix& a) {
  std::vector<Rational> out;
  out.reserve(a.data().entries().size());
  for (const auto& x : a.data().entries()) out.push_back(lambda * x);
  return SuperMatrix(DenseMatrix(a.rows(), a.cols(), std::move(out)), a.row_partition(),
                     a.col_partition());
}

SuperMatrix transpose(const SuperMatrix& a) {
  return SuperMatrix(a.data().transposed(), a.col_partition(), a.row_partition());
}

SuperProduct super_mul(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "left factor has " + std::to_string(a.cols()) + " columns, right factor has " +
                    std::to_string(b.rows()) + " rows");
  }
  if (a.col_partition() != b.row_partition()) {
    throw Error(ErrorKind::PartitionMismatch,
                "inner partitions differ: left column cuts " + cuts_text(a.col_partition()) +
                    ", right row cuts " + cuts_text(b.row_partition()));
  }
  SuperMatrix product(multiply(a.data(), b.data()), a.row_partition(), b.col_partition());
  return {std::move(product),
          ProductWitness{a.col_partition(), a.row_partition(), b.col_partition()}};
}

SuperMatrix gram(const SuperMatrix& a, Side side) {
  const SuperMatrix t = transpose(a);
  return side == Side::Right ? super_mul(a, t).product : super_mul(t, a).product;
}

}  // namespace smx
