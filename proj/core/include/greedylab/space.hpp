#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "greedylab/finite_vector.hpp"
#include "greedylab/layout.hpp"

namespace greedylab {

enum class SpaceKind {
  lp,
  c0_sup,
  schreier,
  alternating_tail_l1_sum,
  signed_subsequence,
  weighted_mixed,
  sparse_block,
  generic_block_sum,
};

enum class BlockSumMode { l1, c0 };

std::string_view to_string(SpaceKind kind);
std::optional<SpaceKind> parse_space_kind(std::string_view name);

/// Provenance of a block space built from a sparse weight f and its sparseness g.
struct SparseBlockMeta {
  double n0 = 0.0;
  bool certified = false;
  std::string f;
  std::string g;
  std::vector<std::string> notes;
};

/// Declarative definition of one of the supported sequence-space norms.
///
/// Unbounded kinds (Lp, C0Sup, Schreier, SignedSubsequence, WeightedMixed)
/// accept any positive index. Block kinds accept indices inside their layout.
class SpaceSpec {
 public:
  static SpaceSpec lp(double p);
  static SpaceSpec c0_sup();
  static SpaceSpec schreier();
  /// l1-sum of blocks normed by max{ max_i |x_i|, max_j |sum_{i>=j} x_i| }.
  static SpaceSpec alternating_tail_l1_sum(std::vector<std::uint64_t> block_sizes);
  /// sup over increasing subsequences of |sum_i (-1)^i x_{n_i}|.
  static SpaceSpec signed_subsequence();
  /// max of the rearranged n^{-1/2}-weighted part and the l2 norm of even coordinates.
  static SpaceSpec weighted_mixed();
  /// c0-sum of blocks normed by max{ ||x_k||_inf, scale_k ||x_k||_1 } where
  /// log_scales[k-1] = log(scale_k).
  static SpaceSpec sparse_block(BlockLayout layout, std::vector<double> log_scales, SparseBlockMeta meta);
  static SpaceSpec generic_block_sum(BlockSumMode mode, std::vector<std::uint64_t> block_sizes,
                                     std::vector<SpaceSpec> blocks);

  SpaceKind kind() const noexcept { return kind_; }
  std::string describe() const;

  double p() const noexcept { return p_; }
  /// Block layout for block kinds, nullptr otherwise.
  const BlockLayout* layout() const noexcept;
  std::span<const double> log_scales() const noexcept { return log_scales_; }
  /// exp(log_scales), underflowing to exactly 0.
  std::span<const double> scales() const noexcept { return scales_; }
  const SparseBlockMeta& sparse_meta() const noexcept { return meta_; }
  BlockSumMode block_sum_mode() const noexcept { return mode_; }
  std::span<const SpaceSpec> inner_spaces() const noexcept { return inner_; }

  /// Largest addressable index (kUnboundedDim for unbounded kinds).
  Index max_index() const;

  /// Norm is monotone under coordinatewise |.|-domination (1-unconditional lattice norm).
  bool is_lattice() const;

  /// Indices sharing a class may be permuted among themselves without changing
  /// any norm value. nullopt means the index is not exchangeable with anything.
  std::optional<std::uint64_t> exchange_class(Index n) const;

  /// Throws out_of_layout naming the offending index and block.
  void validate(const FiniteVector& x) const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&);

 private:
  SpaceKind kind_ = SpaceKind::lp;
  double p_ = 2.0;
  BlockLayout layout_;
  std::vector<double> log_scales_;
  std::vector<double> scales_;
  SparseBlockMeta meta_;
  BlockSumMode mode_ = BlockSumMode::l1;
  std::vector<SpaceSpec> inner_;
};

/// Exact norm of x; validates x against the layout first.
double eval_norm(const SpaceSpec& space, const FiniteVector& x);

/// Exact norm of sorted, nonzero entries; no validation.
double eval_norm(const SpaceSpec& space, std::span<const Entry> entries);

/// Harmonic number s_n = sum_{i<=n} 1/i by compensated summation, n <= 10^6.
double harmonic_number(std::uint64_t n);

}  // namespace greedylab
