#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "greedylab/finite_vector.hpp"
#include "greedylab/weight.hpp"

namespace greedylab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

enum class SelectionKind { natural, greedy, t_weak, abt_weak };

std::string_view to_string(SelectionKind kind);

struct GreedySelection {
  /// rho(1), ..., rho(m)
  IndexSet ordered_indices;
  /// |e_n^*(x)| for each selected index, in the same order.
  std::vector<double> values;
  std::size_t order = 0;
  SelectionKind kind = SelectionKind::natural;
  double t = 1.0;
  std::uint64_t a = 1;
  std::uint64_t b = 1;

  /// ordered_indices as a sorted set.
  IndexSet as_set() const;
};

/// Support ordered by decreasing magnitude, ties to the smaller index.
GreedySelection greedy_ordering(const FiniteVector& x);

/// Lambda_m(x): the first m indices of the greedy ordering, sorted.
IndexSet natural_greedy_set(const FiniteVector& x, std::size_t m);

/// G_m(x) = P_{Lambda_m(x)} x.
FiniteVector greedy_sum(const FiniteVector& x, std::size_t m);

/// min_{n in G} |x_n| >= t * max_{n not in G} |x_n| over the ambient range.
bool is_weak_greedy_set(const FiniteVector& x, std::span<const Index> set, double t);
bool is_greedy_set(const FiniteVector& x, std::span<const Index> set);
/// a-th smallest |x_n| inside >= t * (b-th largest |x_n| outside, 0 if absent).
bool is_abt_weak_greedy(const FiniteVector& x, std::span<const Index> set, std::uint64_t a, std::uint64_t b, double t);

using SetVisitor = std::function<void(std::span<const Index>)>;

/// Streams every t-weak greedy set of size m (t = 1 gives the greedy sets).
/// Fails with enumeration_cap before visiting anything if there are more than `cap`.
void for_each_weak_greedy_set(const FiniteVector& x, std::size_t m, double t, const SetVisitor& visit,
                              std::uint64_t cap = kDefaultEnumerationCap);
void for_each_abt_weak_greedy_set(const FiniteVector& x, std::size_t m, std::uint64_t a, std::uint64_t b, double t,
                                  const SetVisitor& visit, std::uint64_t cap = kDefaultEnumerationCap);

/// Collecting forms; results are sorted lexicographically.
std::vector<IndexSet> enumerate_greedy_sets(const FiniteVector& x, std::size_t m,
                                            std::uint64_t cap = kDefaultEnumerationCap);
std::vector<IndexSet> enumerate_weak_greedy_sets(const FiniteVector& x, std::size_t m, double t,
                                                 std::uint64_t cap = kDefaultEnumerationCap);
std::vector<IndexSet> enumerate_abt_weak_greedy_sets(const FiniteVector& x, std::size_t m, std::uint64_t a,
                                                     std::uint64_t b, double t,
                                                     std::uint64_t cap = kDefaultEnumerationCap);

/// P_A x for a sorted set A.
FiniteVector project(const FiniteVector& x, std::span<const Index> set);
/// x - P_A x
FiniteVector project_complement(const FiniteVector& x, std::span<const Index> set);
/// S_N x
FiniteVector partial_sum(const FiniteVector& x, Index n);

/// sum_j eps_j f(j) e_{n_j} for A = {n_1 < ... < n_m}. Missing f means f = 1,
/// missing signs mean all +1.
FiniteVector indicator(std::span<const Index> set, std::optional<std::span<const int>> signs = std::nullopt,
                       const WeightFunction* f = nullptr, Index ambient_dim = kUnboundedDim);

}  // namespace greedylab
