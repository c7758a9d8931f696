#include "greedylab/combinatorics.hpp"

#include <vector>

#include "greedylab/error.hpp"

namespace greedylab {

namespace {
__extension__ typedef unsigned __int128 u128;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  const std::uint64_t limit = cap + 1;
  // Exact running product in 128 bits; C(n, i) stays integral after each step.
  u128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c >= limit) return limit;
  }
  return static_cast<std::uint64_t>(c);
}

bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(std::span<const std::size_t>)>& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void for_each_subset_mask(std::size_t n, const std::function<void(std::uint64_t)>& fn) {
  if (n > 62) fail(ErrorCode::enumeration_cap, "subset enumeration limited to 62 elements");
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) fn(mask);
}

}  // namespace greedylab
