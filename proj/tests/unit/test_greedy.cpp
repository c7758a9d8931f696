#include <doctest.h>

#include <algorithm>

#include "greedylab/combinatorics.hpp"
#include "greedylab/error.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/samples.hpp"

using namespace greedylab;

namespace {

std::vector<FiniteVector> samples(std::uint64_t seed, Index dim = 9) {
  SampleOptions o;
  o.count = 40;
  o.last_index = dim;
  o.max_support = 6;
  o.seed = seed;
  return make_samples(o);
}

/// Every m-subset of [1, dim] passing `keep`, in lexicographic order.
std::vector<IndexSet> filter_subsets(Index dim, std::size_t m, const std::function<bool(const IndexSet&)>& keep) {
  std::vector<IndexSet> out;
  for_each_combination(dim, m, [&](std::span<const std::size_t> c) {
    IndexSet s;
    for (auto i : c) s.push_back(i + 1);
    if (keep(s)) out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("greedy ordering breaks ties toward the smaller index") {
  const FiniteVector x({{2, -1.0}, {3, 2.0}, {5, 1.0}, {7, 2.0}}, 8);
  const auto g = greedy_ordering(x);
  CHECK(g.ordered_indices == IndexSet{3, 7, 2, 5});
  CHECK(natural_greedy_set(x, 3) == IndexSet{2, 3, 7});
  CHECK(greedy_sum(x, 2) == FiniteVector({{3, 2.0}, {7, 2.0}}, 8));
  CHECK(greedy_sum(x, 10) == x);
}

TEST_CASE("greedy set enumeration agrees with filtering all subsets") {
  for (const auto& x : samples(3)) {
    for (std::size_t m = 1; m <= 4; ++m) {
      CHECK(enumerate_greedy_sets(x, m) ==
            filter_subsets(9, m, [&](const IndexSet& s) { return is_greedy_set(x, s); }));
      for (double t : {0.0, 0.3, 0.8}) {
        CHECK(enumerate_weak_greedy_sets(x, m, t) ==
              filter_subsets(9, m, [&](const IndexSet& s) { return is_weak_greedy_set(x, s, t); }));
      }
    }
  }
}

TEST_CASE("weak greedy sets contain the greedy ones") {
  for (const auto& x : samples(4)) {
    const auto natural = natural_greedy_set(x, 3);
    CHECK(is_greedy_set(x, natural));
    CHECK(is_weak_greedy_set(x, natural, 0.5));
  }
}

TEST_CASE("abt enumeration agrees with its predicate") {
  for (const auto& x : samples(5, 8)) {
    for (std::size_t m = 2; m <= 4; ++m) {
      for (std::uint64_t a : {1, 2}) {
        for (std::uint64_t b : {1, 2}) {
          CHECK(enumerate_abt_weak_greedy_sets(x, m, a, b, 0.5) ==
                filter_subsets(8, m, [&](const IndexSet& s) { return is_abt_weak_greedy(x, s, a, b, 0.5); }));
        }
      }
    }
  }
  CHECK_THROWS_AS(is_abt_weak_greedy(FiniteVector::unit(1, 4), IndexSet{1}, 2, 1, 0.5), Error);
}

TEST_CASE("(1,1,t) sets are the t-weak greedy sets") {
  for (const auto& x : samples(6, 8)) {
    for (std::size_t m = 1; m <= 3; ++m) {
      CHECK(enumerate_abt_weak_greedy_sets(x, m, 1, 1, 0.7) == enumerate_weak_greedy_sets(x, m, 0.7));
    }
  }
}

TEST_CASE("enumeration cap is enforced before visiting") {
  const FiniteVector x = FiniteVector::unit(1, 40);
  std::size_t visited = 0;
  try {
    for_each_weak_greedy_set(x, 10, 0.0, [&](std::span<const Index>) { ++visited; }, 1000);
    FAIL("expected enumeration_cap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::enumeration_cap);
  }
  CHECK(visited == 0);
}

TEST_CASE("indicators enumerate the set in increasing order") {
  const auto f = WeightFunction::alternating();
  const auto v = indicator(IndexSet{4, 9, 11}, std::nullopt, &f, 12);
  CHECK(v == FiniteVector({{4, -1.0}, {9, 1.0}, {11, -1.0}}, 12));
  const std::vector<int> signs{1, -1};
  CHECK(indicator(IndexSet{2, 3}, std::span<const int>(signs)) == FiniteVector({{2, 1.0}, {3, -1.0}}, kUnboundedDim));
}

TEST_CASE("projections and partial sums") {
  const FiniteVector x({{1, 1.0}, {3, -2.0}, {6, 0.5}}, 6);
  CHECK(project(x, IndexSet{3, 4}) == FiniteVector({{3, -2.0}}, 6));
  CHECK(project_complement(x, IndexSet{3}) == FiniteVector({{1, 1.0}, {6, 0.5}}, 6));
  CHECK(partial_sum(x, 3) == FiniteVector({{1, 1.0}, {3, -2.0}}, 6));
}

TEST_CASE("binomials and combinations") {
  CHECK(binomial_capped(20, 10, 1'000'000) == 184756);
  CHECK(binomial_capped(200, 100, 1000) > 1000);
  std::size_t count = 0;
  for_each_combination(7, 3, [&](std::span<const std::size_t>) { return ++count, true; });
  CHECK(count == 35);
}
