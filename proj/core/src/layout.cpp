#include "greedylab/layout.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "greedylab/error.hpp"

namespace greedylab {

namespace {
constexpr double kTwo64 = 18446744073709551616.0;
}

BlockSize BlockSize::of(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "block sizes must be positive");
  return {static_cast<double>(n), std::log(static_cast<double>(n)), n};
}

BlockSize BlockSize::of_real(double n) {
  if (!(n >= 1.0)) fail(ErrorCode::invalid_argument, "block sizes must be at least 1");
  BlockSize s{n, std::log(n), std::nullopt};
  if (std::isfinite(n) && n < kTwo64 && n == std::floor(n)) s.exact = static_cast<std::uint64_t>(n);
  return s;
}

BlockSize BlockSize::of_log(double log_n) {
  if (!(log_n >= 0.0)) fail(ErrorCode::invalid_argument, "block size logarithm must be nonnegative");
  const double v = std::exp(log_n);
  if (std::isfinite(v)) {
    BlockSize s = of_real(std::round(v));
    s.log_value = log_n;
    return s;
  }
  return {std::numeric_limits<double>::infinity(), log_n, std::nullopt};
}

BlockLayout::BlockLayout(std::vector<BlockSize> sizes) : sizes_(std::move(sizes)) {
  starts_.reserve(sizes_.size());
  std::optional<Index> next = 1;
  for (const auto& s : sizes_) {
    starts_.push_back(next);
    if (next && s.exact && *s.exact <= std::numeric_limits<Index>::max() - *next + 1) {
      // next block starts right after this one (may itself overflow)
      const Index end = *next + (*s.exact - 1);
      next = end == std::numeric_limits<Index>::max() ? std::nullopt : std::optional<Index>(end + 1);
    } else {
      next = std::nullopt;
    }
  }
}

BlockLayout BlockLayout::from_sizes(std::span<const std::uint64_t> sizes) {
  std::vector<BlockSize> out;
  out.reserve(sizes.size());
  for (auto n : sizes) out.push_back(BlockSize::of(n));
  return BlockLayout(std::move(out));
}

const BlockSize& BlockLayout::size(std::size_t block) const {
  if (block == 0 || block > sizes_.size()) {
    fail(ErrorCode::out_of_layout, "block " + std::to_string(block) + " does not exist (layout has " +
                                       std::to_string(sizes_.size()) + " blocks)");
  }
  return sizes_[block - 1];
}

std::optional<Index> BlockLayout::start(std::size_t block) const {
  size(block);
  return starts_[block - 1];
}

std::optional<Index> BlockLayout::last(std::size_t block) const {
  const auto s = start(block);
  const auto& n = size(block);
  if (!s || !n.exact) return std::nullopt;
  if (*n.exact - 1 > std::numeric_limits<Index>::max() - *s) return std::nullopt;
  return *s + (*n.exact - 1);
}

std::optional<Index> BlockLayout::total() const {
  if (sizes_.empty()) return Index{0};
  return last(sizes_.size());
}

std::optional<BlockLayout::Location> BlockLayout::locate(Index n) const {
  if (n == 0) return std::nullopt;
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    if (!starts_[k] || n < *starts_[k]) return std::nullopt;
    const Index offset = n - *starts_[k] + 1;
    if (!sizes_[k].exact || offset <= *sizes_[k].exact) return Location{k + 1, offset};
  }
  return std::nullopt;
}

Index BlockLayout::to_index(std::size_t block, Index offset) const {
  const auto& n = size(block);
  if (offset == 0 || (n.exact && offset > *n.exact)) {
    fail(ErrorCode::out_of_layout, "offset " + std::to_string(offset) + " outside block " +
                                       std::to_string(block));
  }
  const auto s = starts_[block - 1];
  if (!s || offset - 1 > std::numeric_limits<Index>::max() - *s) {
    fail(ErrorCode::out_of_layout, "block " + std::to_string(block) + " offset " + std::to_string(offset) +
                                       " is not addressable with 64-bit indices");
  }
  return *s + (offset - 1);
}

bool BlockLayout::strictly_increasing() const {
  for (std::size_t k = 1; k < sizes_.size(); ++k) {
    const auto& a = sizes_[k - 1];
    const auto& b = sizes_[k];
    if (a.exact && b.exact) {
      if (*b.exact <= *a.exact) return false;
    } else if (!(b.value > a.value || b.log_value > a.log_value)) {
      return false;
    }
  }
  return true;
}

}  // namespace greedylab
