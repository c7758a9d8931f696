#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "greedylab/finite_vector.hpp"
#include "greedylab/functionals.hpp"
#include "greedylab/space.hpp"
#include "greedylab/weight.hpp"

namespace greedylab {

/// info: reported for the record, never fails the suite.
enum class CheckStatus { pass, fail, skipped, info };

std::string_view to_string(CheckStatus status);

struct SuiteCheck {
  std::string statement_id;
  CheckStatus status = CheckStatus::pass;
  /// Largest ratio (or value) observed, compared against `bound`.
  std::optional<double> worst_ratio;
  std::optional<double> bound;
  double tolerance = 0.0;
  /// Configuration attaining worst_ratio, or the first violation.
  nlohmann::json witness;
  std::string detail;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
};

struct SuiteReport {
  std::string suite_id;
  std::string space;
  nlohmann::json scope = nlohmann::json::object();
  std::vector<SuiteCheck> checks;
  bool overall = true;
  std::vector<std::string> notes;

  /// Appends a check and folds its status into `overall`.
  SuiteCheck& add(SuiteCheck check);
  const SuiteCheck* find(std::string_view statement_id) const;
};

nlohmann::json vector_json(const FiniteVector& x);
nlohmann::json set_json(std::span<const Index> set);

enum class OrderRule { m, ceil_lambda_m };

struct GreedyInequalityOptions {
  std::size_t m_max = 4;
  FunctionalKind functional = FunctionalKind::sigma;
  /// Weight for the D_f functional; nullptr means f = 1.
  const WeightFunction* f = nullptr;
  OrderRule order_rule = OrderRule::m;
  double lambda = 1.0;
  /// Asserted bound on the fitted constant; without it the constant is only reported.
  std::optional<double> bound;
  double tolerance = 1e-9;
  FunctionalOptions functional_options;
};

/// ||x - G_order(x)|| against the chosen functional for every sample and m <= m_max.
/// One check per m plus the overall fitted constant.
SuiteReport suite_greedy_inequality(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                    const GreedyInequalityOptions& options,
                                    const nlohmann::json& sample_scope = nlohmann::json::object());

/// Coefficient bounds with factor 2 C_q:
///   ||sum_A a_n e_n|| <= 2 C_q max|a_n| ||1_A||
///   min|a_n| ||1_{eps A}|| <= 2 C_q ||sum_A a_n e_n||, eps = sign(a)
///   ||1_{eps A}|| <= 2 C_q ||1_{eta B}|| for A within B and all signs
/// B is the support of each sample (at most 12 indices, sign patterns up to 8).
SuiteReport suite_coefficient_bounds(const SpaceSpec& space, double cq, std::span<const FiniteVector> samples,
                                     const nlohmann::json& sample_scope = nlohmann::json::object());

/// ||P_{A1} x|| <= (8 C_q^3 / t) ||P_{A2} x|| for A1 within A2 and t <= |x_n| <= 1 on A2,
/// after scaling each sample to max |x_n| = 1.
SuiteReport suite_projection_comparison(const SpaceSpec& space, double cq, std::span<const FiniteVector> samples,
                                        double t, const nlohmann::json& sample_scope = nlohmann::json::object());

/// Full democracy over [1, horizon] against disjoint democracy over [1, horizon + max_size]:
/// C_full <= C_disj^2.
SuiteReport suite_disjoint_democracy(const SpaceSpec& space, std::size_t max_size, Index horizon);

/// Growth witnesses for the tail-sum, signed-subsequence, Schreier and weighted
/// mixed spaces, with indicator norms reproduced exactly where they are known.
SuiteReport suite_democracy_counterexamples(std::uint64_t seed = 0);

struct SparseBlockSuiteOptions {
  std::size_t sample_count = 500;
  std::size_t max_support = 10;
  std::size_t m_max = 4;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

/// Indicator norms and the greedy bound ||x - G_m x|| <= 2 D_m^f(x) on a certified
/// sparse block space (two blocks). Non-certified spaces fail with not_certified.
SuiteReport suite_sparse_block(const SpaceSpec& space, const WeightFunction& f,
                               const SparseBlockSuiteOptions& options = {});

/// (a, b, t)-weak greedy projections: boundedness on lattice spaces, exact
/// recovery of finitely supported x at large orders, and the vanishing
/// selection for x = e_1 with b = 2.
SuiteReport suite_abt_quasi_greedy(const SpaceSpec& space, double cq, std::span<const FiniteVector> samples,
                                   std::span<const std::uint64_t> a_set, std::span<const std::uint64_t> b_set,
                                   double t, const nlohmann::json& sample_scope = nlohmann::json::object());

/// t-weak greedy projections: boundedness, agreement with suppression at t = 0,
/// and agreement with greedy sets at t = 1 for distinct magnitudes.
SuiteReport suite_weak_quasi_greedy(const SpaceSpec& space, std::span<const FiniteVector> samples, double t,
                                    const nlohmann::json& sample_scope = nlohmann::json::object());

}  // namespace greedylab
