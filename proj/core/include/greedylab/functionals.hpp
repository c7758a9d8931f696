#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greedylab/finite_vector.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/space.hpp"
#include "greedylab/weight.hpp"

namespace greedylab {

enum class FunctionalKind { sigma, sigma_tilde, d_f };
enum class OptimizerStatus { exact, converged, capped };

/// exhaustive: every candidate set (after exact compression), failing past the cap.
/// structured: greedy-order windows only, reported as an upper bound with status capped.
/// automatic: exhaustive when within the cap, structured otherwise.
enum class SearchMode { exhaustive, structured, automatic };

std::string_view to_string(FunctionalKind kind);
std::string_view to_string(OptimizerStatus status);
std::string_view to_string(SearchMode mode);

struct FunctionalOptions {
  /// Candidate sets live in [1, horizon]; defaults to max(supp x) + m + 4.
  std::optional<Index> horizon;
  std::uint64_t cap = kDefaultEnumerationCap;
  SearchMode search = SearchMode::exhaustive;
  /// Use coordinate descent for sigma even when the closed form applies.
  bool force_iterative = false;
  double tolerance = 1e-9;
  int restarts = 5;
  std::uint64_t seed = 0;
};

struct FunctionalResult {
  FunctionalKind kind = FunctionalKind::sigma;
  std::size_t m = 0;
  double value = 0.0;
  IndexSet witness_set;
  /// Coefficients subtracted on witness_set (alpha * f(j) for D-type).
  std::vector<double> witness_coefficients;
  std::optional<double> alpha;
  OptimizerStatus status = OptimizerStatus::exact;
  double tolerance = 0.0;
  std::optional<double> oracle_value;
  Index horizon = 0;
  std::uint64_t candidates = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

Index default_horizon(const FiniteVector& x, std::size_t m);

/// inf over |A| = m of min over coefficients of ||x - sum_A a_n e_n||.
FunctionalResult sigma_m(const SpaceSpec& space, const FiniteVector& x, std::size_t m,
                         const FunctionalOptions& options = {});

/// inf over |A| = m of ||x - P_A x||.
FunctionalResult sigma_tilde_m(const SpaceSpec& space, const FiniteVector& x, std::size_t m,
                               const FunctionalOptions& options = {});

/// inf over |B| = m and alpha of ||x - alpha 1_{f,B}||; f = nullptr gives D_m.
FunctionalResult d_m_f(const SpaceSpec& space, const FiniteVector& x, std::size_t m, const WeightFunction* f,
                       const FunctionalOptions& options = {});

/// ||x - sum_A a_n e_n|| for the given coefficients.
double residual_norm(const SpaceSpec& space, const FiniteVector& x, std::span<const Index> set,
                     std::span<const double> coefficients);

/// Brute-force references: every m-subset of [1, horizon] without compression,
/// coefficients by a zooming grid (coarse step `step`, refined down to 1e-6).
/// sigma supports m <= 2.
double grid_oracle_sigma_m(const SpaceSpec& space, const FiniteVector& x, std::size_t m, Index horizon,
                           double step = 0.05);
double grid_oracle_d_m_f(const SpaceSpec& space, const FiniteVector& x, std::size_t m, const WeightFunction* f,
                         Index horizon, double step = 0.05);

}  // namespace greedylab
