#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace greedylab {

/// Coordinate index, 1-based.
using Index = std::uint64_t;

/// Ambient dimension used for vectors that live in an unbounded sequence space.
inline constexpr Index kUnboundedDim = std::numeric_limits<Index>::max();

/// Sorted, duplicate-free list of indices.
using IndexSet = std::vector<Index>;

struct Entry {
  Index index = 0;
  double value = 0.0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// A finitely supported coefficient sequence truncated to [1, ambient_dim].
///
/// Entries are kept sorted by index and exact zeros are never stored, so two
/// vectors compare equal exactly when they have the same coordinates.
class FiniteVector {
 public:
  FiniteVector() = default;
  explicit FiniteVector(Index ambient_dim);
  /// Throws on index 0, indices beyond ambient_dim, duplicates and non-finite values.
  FiniteVector(std::vector<Entry> entries, Index ambient_dim);

  static FiniteVector unit(Index n, Index ambient_dim);

  Index ambient_dim() const noexcept { return ambient_dim_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Coordinate functional e_n^*(x).
  double operator[](Index n) const;
  IndexSet support() const;
  /// Largest index in the support, 0 for the zero vector.
  Index max_index() const noexcept;
  double max_abs() const noexcept;

  void set(Index n, double value);
  FiniteVector with_ambient_dim(Index ambient_dim) const;
  FiniteVector scaled(double factor) const;

  friend FiniteVector operator+(const FiniteVector& x, const FiniteVector& y);
  friend FiniteVector operator-(const FiniteVector& x, const FiniteVector& y);
  friend bool operator==(const FiniteVector&, const FiniteVector&) = default;

 private:
  std::vector<Entry> entries_;
  Index ambient_dim_ = kUnboundedDim;
};

/// True when `set` is strictly increasing.
bool is_sorted_set(std::span<const Index> set);
IndexSet make_index_set(std::vector<Index> indices);

}  // namespace greedylab
