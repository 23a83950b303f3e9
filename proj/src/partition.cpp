#include "smx/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "smx/error.hpp"

namespace smx {

Partition Partition::make(std::size_t length, const std::vector<std::ptrdiff_t>& cuts) {
  if (length == 0) {
    throw Error(ErrorKind::ZeroDimension, "partition length must be positive");
  }
  const auto last = static_cast<std::ptrdiff_t>(length) - 1;
  for (const auto c : cuts) {
    if (c < 1 || c > last) {
      throw Error(ErrorKind::CutOutOfRange,
                  "cut " + std::to_string(c) + " outside [1, " + std::to_string(last) + "]");
    }
  }
  auto sorted = cuts;
  std::sort(sorted.begin(), sorted.end());
  if (const auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorKind::DuplicateCut, "cut " + std::to_string(*dup) + " repeated");
  }
  if (sorted != cuts) {
    throw Error(ErrorKind::UnsortedCuts, "cuts must be strictly increasing");
  }
  Partition p(length, std::vector<std::size_t>(cuts.begin(), cuts.end()));
  [[maybe_unused]] const auto widths = p.block_sizes();
  assert(std::accumulate(widths.begin(), widths.end(), std::size_t{0}) == length);
  return p;
}

Partition Partition::trivial(std::size_t length) { return make(length, {}); }

std::size_t Partition::block_offset(std::size_t block) const {
  if (block >= block_count()) {
    throw Error(ErrorKind::BlockIndexOutOfRange,
                "block " + std::to_string(block + 1) + " of " + std::to_string(block_count()));
  }
  return block == 0 ? 0 : cuts_[block - 1];
}

std::size_t Partition::block_size(std::size_t block) const {
  const std::size_t begin = block_offset(block);
  const std::size_t end = block + 1 < block_count() ? cuts_[block] : length_;
  return end - begin;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(block_count());
  std::size_t prev = 0;
  for (const auto c : cuts_) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(length_ - prev);
  return sizes;
}

}  // namespace smx
