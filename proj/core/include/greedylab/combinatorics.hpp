#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace greedylab {

/// C(n, k), saturating at `cap + 1` so callers can compare against a cap
/// without overflow.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

/// Visits every k-subset of {0, ..., n-1} in lexicographic order. The callback
/// returns false to stop early; the function returns false if it was stopped.
bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(std::span<const std::size_t>)>& fn);

/// Visits every subset of {0, ..., n-1} (as a bitmask), n <= 62.
void for_each_subset_mask(std::size_t n, const std::function<void(std::uint64_t)>& fn);

}  // namespace greedylab
