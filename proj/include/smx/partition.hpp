#pragma once

#include <cstddef>
#include <vector>

namespace smx {

// Cut positions along one axis. A cut c sits between index c-1 and c
// (0-based), so cuts live in [1, length-1]. No cuts means one block.
class Partition {
 public:
  // Validates without normalizing: CutOutOfRange, DuplicateCut, UnsortedCuts.
  // ZeroDimension when length == 0.
  static Partition make(std::size_t length, const std::vector<std::ptrdiff_t>& cuts);
  static Partition trivial(std::size_t length);

  std::size_t length() const noexcept { return length_; }
  const std::vector<std::size_t>& cuts() const noexcept { return cuts_; }
  std::size_t block_count() const noexcept { return cuts_.size() + 1; }
  bool is_trivial() const noexcept { return cuts_.empty(); }

  // 0-based block index.
  std::size_t block_offset(std::size_t block) const;
  std::size_t block_size(std::size_t block) const;
  std::vector<std::size_t> block_sizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Partition(std::size_t length, std::vector<std::size_t> cuts)
      : length_(length), cuts_(std::move(cuts)) {}

  std::size_t length_ = 1;
  std::vector<std::size_t> cuts_;
};

}  // namespace smx
