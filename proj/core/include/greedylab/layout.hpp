#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "greedylab/finite_vector.hpp"

namespace greedylab {

/// Size of one block. Sizes that do not fit in 64 bits keep their real value
/// and natural logarithm only.
struct BlockSize {
  double value = 0.0;
  double log_value = 0.0;
  std::optional<std::uint64_t> exact;

  static BlockSize of(std::uint64_t n);
  /// From a real value; exact when it is an integer below 2^64.
  static BlockSize of_real(double n);
  /// From log(n) alone, for sizes beyond the double range.
  static BlockSize of_log(double log_n);

  friend bool operator==(const BlockSize&, const BlockSize&) = default;
};

/// Consecutive blocks M_1 = [1, N_1], M_2 = [N_1 + 1, N_1 + N_2], ...
class BlockLayout {
 public:
  struct Location {
    std::size_t block = 0;  // 1-based
    Index offset = 0;       // 1-based within the block
  };

  BlockLayout() = default;
  explicit BlockLayout(std::vector<BlockSize> sizes);
  static BlockLayout from_sizes(std::span<const std::uint64_t> sizes);

  std::size_t num_blocks() const noexcept { return sizes_.size(); }
  const BlockSize& size(std::size_t block) const;
  std::span<const BlockSize> sizes() const noexcept { return sizes_; }

  /// First absolute index of `block`, if it is representable.
  std::optional<Index> start(std::size_t block) const;
  /// Last absolute index of `block`, if it is representable.
  std::optional<Index> last(std::size_t block) const;
  /// Total dimension, if it is representable.
  std::optional<Index> total() const;

  /// nullopt when n lies beyond the last block.
  std::optional<Location> locate(Index n) const;
  /// Throws out_of_layout when the pair is invalid or not addressable.
  Index to_index(std::size_t block, Index offset) const;

  bool strictly_increasing() const;

  friend bool operator==(const BlockLayout& a, const BlockLayout& b) { return a.sizes_ == b.sizes_; }

 private:
  std::vector<BlockSize> sizes_;
  // starts_[k] is the first index of block k+1; nullopt once it overflows.
  std::vector<std::optional<Index>> starts_;
};

}  // namespace greedylab
