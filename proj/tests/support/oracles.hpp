#pragma once

// Brute-force reference norms. They enumerate the defining families directly
// and are only meant for small dimensions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "greedylab/finite_vector.hpp"

namespace greedylab::oracle {

inline std::vector<double> dense(const FiniteVector& x, Index dim) {
  std::vector<double> v(dim + 1, 0.0);
  for (const auto& e : x.entries()) v.at(e.index) = e.value;
  return v;
}

/// max over F with min F >= |F| of sum_F |x_i|, F inside [1, dim].
inline double schreier(const FiniteVector& x, Index dim) {
  const auto v = dense(x, dim);
  double best = 0.0;
  // Sets with minimum s: s itself plus at most s - 1 larger indices.
  std::vector<Index> stack;
  auto rec = [&](auto&& self, Index next, std::size_t room, double sum) -> void {
    best = std::max(best, sum);
    if (room == 0) return;
    for (Index n = next; n <= dim; ++n) self(self, n + 1, room - 1, sum + std::abs(v[n]));
  };
  for (Index s = 1; s <= dim; ++s) rec(rec, s + 1, s - 1, std::abs(v[s]));
  return best;
}

/// max over increasing n_1 < ... < n_N of |sum_i (-1)^i x_{n_i}|, every subset of [1, dim].
inline double signed_subsequence(const FiniteVector& x, Index dim) {
  const auto v = dense(x, dim);
  double best = 0.0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << dim); ++mask) {
    double s = 0.0;
    int i = 0;
    for (Index n = 1; n <= dim; ++n) {
      if (mask >> (n - 1) & 1) {
        ++i;
        s += (i % 2 ? -1.0 : 1.0) * v[n];
      }
    }
    best = std::max(best, std::abs(s));
  }
  return best;
}

/// The rearranged part sup_n s_n^{-1/2} sup_pi sum_{i<=n} |x_{pi(i)}| i^{-1/2}, by
/// trying every ordering of the support padded with one zero coordinate.
inline double weighted_mixed_rearranged(const FiniteVector& x) {
  std::vector<double> mags;
  for (const auto& e : x.entries()) mags.push_back(std::abs(e.value));
  mags.push_back(0.0);
  std::vector<std::size_t> perm(mags.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double sum = 0.0, s = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      const double w = 1.0 / std::sqrt(static_cast<double>(i + 1));
      sum += mags[perm[i]] * w;
      s += 1.0 / static_cast<double>(i + 1);
      best = std::max(best, sum / std::sqrt(s));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline double weighted_mixed(const FiniteVector& x) {
  double even = 0.0;
  for (const auto& e : x.entries()) {
    if (e.index % 2 == 0) even += e.value * e.value;
  }
  return std::max(weighted_mixed_rearranged(x), std::sqrt(even));
}

/// max{max |x_i|, max_j |sum_{i>=j} x_i|} of one block given as dense values.
inline double tail_block(const std::vector<double>& block) {
  double best = 0.0;
  for (std::size_t j = 0; j < block.size(); ++j) {
    best = std::max(best, std::abs(block[j]));
    double tail = 0.0;
    for (std::size_t i = j; i < block.size(); ++i) tail += block[i];
    best = std::max(best, std::abs(tail));
  }
  return best;
}

}  // namespace greedylab::oracle
