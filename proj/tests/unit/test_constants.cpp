#include <doctest.h>

#include "greedylab/constants.hpp"
#include "greedylab/error.hpp"
#include "greedylab/samples.hpp"

using namespace greedylab;

namespace {

std::vector<FiniteVector> samples(std::uint64_t seed, Index last = 10) {
  SampleOptions o;
  o.count = 30;
  o.last_index = last;
  o.max_support = 6;
  o.seed = seed;
  return make_samples(o);
}

DemocracyOptions pairs(std::size_t max_size, Index horizon, DemocracyFamily fam = DemocracyFamily::all_pairs) {
  DemocracyOptions o;
  o.max_size = max_size;
  o.horizon = horizon;
  o.family = fam;
  return o;
}

}  // namespace

TEST_CASE("lp democracy constants are 1") {
  for (double p : {1.0, 2.0, 4.0}) {
    const auto r = democracy_constant(SpaceSpec::lp(p), pairs(5, 10));
    CHECK(r.estimate == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.bound_direction == BoundDirection::exact_over_enumerated_range);
  }
}

TEST_CASE("democracy families are ordered") {
  const auto s = SpaceSpec::schreier();
  const double full = democracy_constant(s, pairs(5, 12)).estimate;
  const double disj = democracy_constant(s, pairs(5, 12, DemocracyFamily::disjoint_only)).estimate;
  const double sup = democracy_constant(s, pairs(5, 12, DemocracyFamily::signed_sets)).estimate;
  CHECK(disj <= full + 1e-12);
  CHECK(full <= sup + 1e-12);
  CHECK(full <= 2.0 + 1e-12);
}

TEST_CASE("signed subsequence basis is far from democratic") {
  const auto r = democracy_constant(SpaceSpec::signed_subsequence(), pairs(6, 12));
  CHECK(r.estimate >= 5.0);
  CHECK(r.witness.numerator / r.witness.denominator == doctest::Approx(r.estimate));
  const auto f = WeightFunction::alternating();
  auto o = pairs(6, 12);
  o.f = &f;
  CHECK(democracy_constant(SpaceSpec::signed_subsequence(), o).estimate == doctest::Approx(1.0));
}

TEST_CASE("lattice spaces are 1-suppression unconditional") {
  for (const auto& s : {SpaceSpec::lp(1.5), SpaceSpec::schreier(), SpaceSpec::weighted_mixed(), SpaceSpec::c0_sup()}) {
    const auto xs = samples(7);
    CHECK(suppression_unconditional_estimate(s, xs).estimate == doctest::Approx(1.0));
    CHECK(unconditional_estimate(s, xs).estimate == doctest::Approx(1.0));
    CHECK(quasi_greedy_estimate(s, xs).estimate == doctest::Approx(1.0));
    CHECK(basis_constant_estimate(s, xs).estimate == doctest::Approx(1.0));
  }
}

TEST_CASE("estimators are consistent with each other") {
  const auto s = SpaceSpec::signed_subsequence();
  const auto xs = samples(8);
  const double ksu = suppression_unconditional_estimate(s, xs).estimate;
  const double ku = unconditional_estimate(s, xs).estimate;
  const double cq = quasi_greedy_estimate(s, xs).estimate;
  CHECK(ksu > 1.0);
  CHECK(cq <= ksu + 1e-12);
  CHECK(ksu <= ku + 1e-12);
  CHECK(t_quasi_greedy_estimate(s, xs, 0.0).estimate == doctest::Approx(ksu).epsilon(1e-12));
  CHECK(t_quasi_greedy_estimate(s, xs, 0.5).estimate >= cq - 1e-12);
  const std::vector<std::uint64_t> one{1};
  CHECK(abt_quasi_greedy_estimate(s, xs, one, one, 0.5).estimate >= cq - 1e-12);
}

TEST_CASE("coordinate product of normalized lattice bases") {
  CHECK(coordinate_product(SpaceSpec::lp(2), 10, samples(9)).estimate == doctest::Approx(1.0));
  CHECK(coordinate_product(SpaceSpec::signed_subsequence(), 10, samples(9)).estimate == doctest::Approx(1.0));
}

TEST_CASE("zero samples are rejected") {
  const std::vector<FiniteVector> xs{FiniteVector(5)};
  CHECK_THROWS_AS(suppression_unconditional_estimate(SpaceSpec::lp(2), xs), Error);
}
