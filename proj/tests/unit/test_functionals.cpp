#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "greedylab/error.hpp"
#include "greedylab/functionals.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/samples.hpp"

using namespace greedylab;

namespace {

std::vector<FiniteVector> samples(std::size_t count, Index last, std::size_t max_support, std::uint64_t seed) {
  SampleOptions o;
  o.count = count;
  o.last_index = last;
  o.max_support = max_support;
  o.seed = seed;
  return make_samples(o);
}

/// Best m-term error in l2: the norm of everything but the m largest coordinates.
double l2_tail(const FiniteVector& x, std::size_t m) {
  std::vector<double> mags;
  for (const auto& e : x.entries()) mags.push_back(std::abs(e.value));
  std::sort(mags.rbegin(), mags.rend());
  double s = 0.0;
  for (std::size_t i = m; i < mags.size(); ++i) s += mags[i] * mags[i];
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("l2 and l1 closed forms") {
  const FiniteVector x({{1, 3.0}, {2, 2.0}, {3, 1.0}}, 3);
  const auto l2 = SpaceSpec::lp(2);
  CHECK(sigma_m(l2, x, 1).value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  FunctionalOptions iter;
  iter.force_iterative = true;
  CHECK(sigma_m(l2, x, 1, iter).value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-8));
  CHECK(sigma_tilde_m(SpaceSpec::lp(1), x, 1).value == 3.0);
  const auto r = sigma_tilde_m(SpaceSpec::lp(1), x, 1);
  CHECK(r.status == OptimizerStatus::exact);
  CHECK(r.witness_set == IndexSet{1});
}

TEST_CASE("sigma in l2 is the greedy residual") {
  const auto l2 = SpaceSpec::lp(2);
  for (const auto& x : samples(60, 12, 8, 2)) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const double closed = l2_tail(x, m);
      CHECK(sigma_m(l2, x, m).value == doctest::Approx(closed).epsilon(1e-12));
      CHECK(eval_norm(l2, x - greedy_sum(x, m)) == doctest::Approx(closed).epsilon(1e-12));
    }
  }
}

TEST_CASE("sigma never exceeds sigma tilde and witnesses reproduce the value") {
  const std::vector<SpaceSpec> spaces{SpaceSpec::lp(1.5), SpaceSpec::schreier(), SpaceSpec::signed_subsequence(),
                                      SpaceSpec::alternating_tail_l1_sum({2, 3, 4, 5}), SpaceSpec::weighted_mixed()};
  for (const auto& s : spaces) {
    CAPTURE(s.describe());
    for (const auto& x : samples(10, 10, 5, 3)) {
      for (std::size_t m = 1; m <= 2; ++m) {
        const auto sig = sigma_m(s, x, m);
        const auto tilde = sigma_tilde_m(s, x, m);
        CHECK(sig.value <= tilde.value + 1e-12);
        CHECK(residual_norm(s, x, sig.witness_set, sig.witness_coefficients) ==
              doctest::Approx(sig.value).epsilon(1e-12));
        CHECK(sig.witness_set.size() == m);
      }
    }
  }
}

TEST_CASE("sigma agrees with the grid oracle") {
  const std::vector<SpaceSpec> spaces{SpaceSpec::schreier(), SpaceSpec::signed_subsequence(),
                                      SpaceSpec::alternating_tail_l1_sum({2, 3, 4}), SpaceSpec::lp(3)};
  for (const auto& s : spaces) {
    CAPTURE(s.describe());
    for (const auto& x : samples(6, 7, 4, 9)) {
      CAPTURE(x.support());
      for (std::size_t m = 1; m <= 2; ++m) {
        const double got = sigma_m(s, x, m, {.horizon = 8}).value;
        const double ref = grid_oracle_sigma_m(s, x, m, 8);
        CHECK(got <= ref + 1e-6);
        CHECK(got >= ref - 1e-4 * std::max(1.0, ref));
      }
    }
  }
}

TEST_CASE("D functional against the grid oracle") {
  const auto l2 = SpaceSpec::lp(2);
  const FiniteVector x({{1, 2.0}, {2, 2.0}}, 2);
  CHECK(d_m_f(l2, x, 2, nullptr).value < 1e-8);
  CHECK(d_m_f(l2, x, 1, nullptr).value == doctest::Approx(2.0).epsilon(1e-9));

  const auto f = WeightFunction::geometric(0.5);
  const std::vector<SpaceSpec> spaces{SpaceSpec::lp(1), SpaceSpec::schreier(), SpaceSpec::signed_subsequence()};
  for (const auto& s : spaces) {
    CAPTURE(s.describe());
    for (const auto& y : samples(5, 6, 3, 17)) {
      for (std::size_t m = 1; m <= 2; ++m) {
        const auto r = d_m_f(s, y, m, &f, {.horizon = 7});
        const double ref = grid_oracle_d_m_f(s, y, m, &f, 7);
        CHECK(r.value <= ref + 1e-6);
        CHECK(r.value >= ref - 1e-4 * std::max(1.0, ref));
        REQUIRE(r.alpha);
        CHECK(r.witness_set.size() == m);
      }
    }
  }
}

TEST_CASE("enumeration caps and the structured fallback") {
  const auto s = SpaceSpec::signed_subsequence();
  SampleOptions o;
  o.count = 1;
  o.last_index = 30;
  o.min_support = 12;
  o.max_support = 12;
  const auto x = make_samples(o).front();
  FunctionalOptions strict;
  strict.cap = 10;
  try {
    (void)sigma_m(s, x, 3, strict);
    FAIL("expected enumeration_cap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::enumeration_cap);
  }
  FunctionalOptions autom = strict;
  autom.search = SearchMode::automatic;
  const auto r = sigma_m(s, x, 3, autom);
  CHECK(r.status == OptimizerStatus::capped);
  CHECK(r.value <= eval_norm(s, x));
}

TEST_CASE("finitely supported x with m at least its support size") {
  const FiniteVector x({{2, 1.0}, {5, -3.0}}, 8);
  for (const auto& s : {SpaceSpec::lp(2), SpaceSpec::schreier(), SpaceSpec::signed_subsequence()}) {
    CHECK(sigma_m(s, x, 2).value == 0.0);
    CHECK(sigma_tilde_m(s, x, 3).value == 0.0);
  }
}
