#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "greedylab/finite_vector.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/space.hpp"
#include "greedylab/weight.hpp"

namespace greedylab {

enum class ConstantKind {
  democracy,
  f_democracy,
  disjoint_democracy,
  super_democracy,
  suppression_unconditional,
  unconditional,
  quasi_greedy,
  t_quasi_greedy,
  abt_quasi_greedy,
  basis_constant,
  coordinate_product,
};

enum class BoundDirection { lower_bound, exact_over_enumerated_range };

enum class DemocracyFamily { all_pairs, structured, disjoint_only, signed_sets };

std::string_view to_string(ConstantKind kind);
std::string_view to_string(BoundDirection direction);
std::string_view to_string(DemocracyFamily family);
std::optional<DemocracyFamily> parse_democracy_family(std::string_view name);

/// The configuration attaining an estimate. Ratio-type witnesses satisfy
/// estimate = numerator / denominator.
struct ConstantsWitness {
  IndexSet set_a;
  IndexSet set_b;
  std::vector<int> signs_a;
  std::vector<int> signs_b;
  std::optional<FiniteVector> vector;
  std::optional<std::size_t> order;
  std::optional<Index> index;
  double numerator = 1.0;
  double denominator = 1.0;
};

struct ConstantsReport {
  ConstantKind kind = ConstantKind::democracy;
  /// e.g. "f=reciprocal", "t=0.5", "A={1,2} B={1} t=0.5"
  std::string parameters;
  double estimate = 1.0;
  BoundDirection bound_direction = BoundDirection::lower_bound;
  ConstantsWitness witness;
  std::string search_scope;
  std::string space;
  std::uint64_t configurations = 0;
  std::vector<std::string> notes;
};

struct DemocracyOptions {
  const WeightFunction* f = nullptr;
  std::size_t max_size = 8;
  Index horizon = 16;
  DemocracyFamily family = DemocracyFamily::all_pairs;
  /// Sizes used by the structured family; empty means 1..max_size.
  std::vector<std::size_t> sizes;
  std::uint64_t cap = kDefaultEnumerationCap;
};

/// max ||1_{f,A}|| / ||1_{f,B}|| over the admitted pairs with |A| = |B|.
///   all_pairs: every pair inside [1, horizon], horizon <= 16
///   disjoint_only: every disjoint pair inside [1, horizon], horizon <= 24
///   signed_sets: every pair and sign pattern inside [1, horizon], horizon <= 12
///   structured: intervals, progressions and block-aligned sets of each size
ConstantsReport democracy_constant(const SpaceSpec& space, const DemocracyOptions& options);

/// Candidate sets of size m used by the structured democracy family.
std::vector<IndexSet> structured_sets(const SpaceSpec& space, std::size_t m);

/// max ||P_A x|| / ||x|| over samples and all A within the support.
ConstantsReport suppression_unconditional_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                                   std::string_view sample_description = {});
/// max ||sum eps_n x_n e_n|| / ||x|| over samples and sign patterns.
ConstantsReport unconditional_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                       std::string_view sample_description = {});
/// max ||P_G x|| / ||x|| over samples, orders and every greedy set G.
ConstantsReport quasi_greedy_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                      std::string_view sample_description = {},
                                      std::uint64_t cap = kDefaultEnumerationCap);
/// Same over every t-weak greedy set.
ConstantsReport t_quasi_greedy_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples, double t,
                                        std::string_view sample_description = {},
                                        std::uint64_t cap = kDefaultEnumerationCap);
/// Same over every (a, b, t)-weak greedy set with a in a_set, b in b_set, orders m >= a.
ConstantsReport abt_quasi_greedy_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                          std::span<const std::uint64_t> a_set, std::span<const std::uint64_t> b_set,
                                          double t, std::string_view sample_description = {},
                                          std::uint64_t cap = kDefaultEnumerationCap);
/// max ||S_N x|| / ||x|| over samples and N.
ConstantsReport basis_constant_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                        std::string_view sample_description = {});
/// max_n ||e_n|| * max_x |e_n^*(x)| / ||x|| over n <= horizon, with the unit
/// vectors themselves added to the samples.
ConstantsReport coordinate_product(const SpaceSpec& space, Index horizon, std::span<const FiniteVector> samples = {},
                                   std::string_view sample_description = {});

}  // namespace greedylab
