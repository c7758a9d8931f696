#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "greedylab/finite_vector.hpp"
#include "greedylab/space.hpp"
#include "greedylab/weight.hpp"

namespace greedylab {

struct SparsenessReport {
  bool passed = false;
  /// g grows without bound along n = 2^j (sampled).
  bool unbounded = false;
  /// g(n)/n is nonincreasing or bounded away from 0 (sampled).
  bool ratio_condition = false;
  /// max_A |f| >= g(|A|)/|A| * sum_A |f| for every A checked.
  bool set_condition = false;
  std::uint64_t max_set_size = 0;
  std::uint64_t index_horizon = 0;
  /// Largest value of g(|A|)/|A| * sum_A |f| / max_A |f| found; above 1 means failure.
  double worst_ratio = 0.0;
  IndexSet witness;
  std::vector<std::string> notes;
};

/// Checks the sparseness inequality over every nonempty A of size at most
/// max_set_size inside [1, index_horizon]. The worst A of each size is found
/// exactly: with the max fixed, the remaining elements are the next largest.
SparsenessReport check_sparseness(const WeightFunction& f, const WeightFunction& g, std::uint64_t max_set_size,
                                  std::uint64_t index_horizon);

struct SparseBlockMode {
  bool certified = true;
  /// Surrogate sizes N_0, N_1, ..., used verbatim.
  std::vector<double> n_list;

  static SparseBlockMode certified_mode() { return {}; }
  static SparseBlockMode surrogate(std::vector<double> n_list) { return {false, std::move(n_list)}; }
};

/// Smallest n with g(m) > e for all m >= n, scanning up to 10^6.
std::uint64_t sparse_block_n0(const WeightFunction& g);

/// Builds the c0-sum of blocks X_k with sizes N_k and l1 weights log g(N_{k-1}) / N_k.
/// Certified mode runs the size recursion and fails with `overflow` once N_k
/// leaves the double range, which happens after block 2 for the standard example.
SpaceSpec build_sparse_block_space(const WeightFunction& f, const WeightFunction& g, std::size_t num_blocks,
                               const SparseBlockMode& mode);

}  // namespace greedylab
