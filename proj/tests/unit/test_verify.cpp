#include <doctest.h>

#include "greedylab/error.hpp"
#include "greedylab/io.hpp"
#include "greedylab/samples.hpp"
#include "greedylab/sparse_block.hpp"
#include "greedylab/verify.hpp"

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

bool passed(const SuiteReport& r, const char* id) {
  const auto* c = r.find(id);
  return c && c->status == CheckStatus::pass;
}

}  // namespace

TEST_CASE("l2 is 1-greedy") {
  const auto xs = samples(40, 12, 6, 1);
  GreedyInequalityOptions o;
  o.m_max = 8;
  o.bound = 1.0 + 1e-6;
  const auto r = suite_greedy_inequality(SpaceSpec::lp(2), xs, o);
  CHECK(r.overall);
  CHECK(r.find("fitted_constant")->worst_ratio.value() <= 1.0 + 1e-6);
  // Orders at or above the support size give 0/0 and are skipped.
  CHECK(r.find("fitted_constant_m8")->skipped > 0);
}

TEST_CASE("sigma tilde fitted constant sits between 1 and the sigma one") {
  const auto xs = samples(15, 9, 5, 2);
  const auto s = SpaceSpec::signed_subsequence();
  GreedyInequalityOptions o;
  o.m_max = 3;
  const auto sig = suite_greedy_inequality(s, xs, o);
  o.functional = FunctionalKind::sigma_tilde;
  const auto tilde = suite_greedy_inequality(s, xs, o);
  const double a = tilde.find("fitted_constant")->worst_ratio.value();
  const double b = sig.find("fitted_constant")->worst_ratio.value();
  CHECK(a >= 1.0 - 1e-12);
  CHECK(a <= b + 1e-12);
  CHECK(sig.find("fitted_constant")->status == CheckStatus::info);
}

TEST_CASE("coefficient bounds and projection comparison on l1") {
  const auto xs = samples(30, 12, 8, 3);
  const auto s = SpaceSpec::lp(1);
  const auto gu = suite_coefficient_bounds(s, 1.0, xs);
  CHECK(gu.overall);
  CHECK(gu.checks.size() == 3);
  for (const auto& c : gu.checks) CHECK(c.worst_ratio.value() <= 2.0);
  const auto l1 = suite_projection_comparison(SpaceSpec::lp(2), 1.0, xs, 0.5);
  CHECK(l1.overall);
  CHECK(l1.checks.front().worst_ratio.value() <= 16.0);
  CHECK(l1.checks.front().worst_ratio.value() >= 1.0);
}

TEST_CASE("disjoint democracy bound") {
  for (const auto& s : {SpaceSpec::lp(2), SpaceSpec::schreier(), SpaceSpec::alternating_tail_l1_sum({4, 5, 6, 7})}) {
    const auto r = suite_disjoint_democracy(s, 4, 8);
    CHECK(r.overall);
  }
  CHECK(suite_disjoint_democracy(SpaceSpec::lp(2), 4, 8).scope["c_full"].get<double>() == 1.0);
}

TEST_CASE("democracy counterexamples reproduce the stated values") {
  const auto r = suite_democracy_counterexamples(3);
  CHECK(r.overall);
  for (const auto& c : r.checks) {
    CAPTURE(c.statement_id);
    CHECK(c.status == CheckStatus::pass);
  }
  CHECK(r.find("signed_subsequence_odd_indices_growth")->detail.find("equals m") != std::string::npos);
}

TEST_CASE("sparse block suite needs a certified space") {
  const auto half_n = WeightFunction::power(-1).scaled(0.5);
  const auto f = WeightFunction::geometric(0.5);
  const auto surrogate = build_sparse_block_space(f, half_n, 0, SparseBlockMode::surrogate({6, 20, 50}));
  try {
    (void)suite_sparse_block(surrogate, f);
    FAIL("expected not_certified");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_certified);
  }
  const auto certified = build_sparse_block_space(f, half_n, 2, SparseBlockMode::certified_mode());
  SparseBlockSuiteOptions o;
  o.sample_count = 10;
  o.m_max = 2;
  const auto r = suite_sparse_block(certified, f, o);
  CHECK(r.overall);
  CHECK(passed(r, "block_indicator_norm"));
  CHECK(passed(r, "block_democracy_ratio"));
  CHECK(passed(r, "greedy_bound_two_d_f"));
}

TEST_CASE("abt suite on l2") {
  const auto xs = samples(8, 9, 4, 5);
  const std::vector<std::uint64_t> a{1, 2}, b{1, 2};
  const auto r = suite_abt_quasi_greedy(SpaceSpec::lp(2), 1.0, xs, a, b, 0.5);
  CHECK(r.overall);
  CHECK(passed(r, "projection_bounded"));
  CHECK(passed(r, "large_order_recovers_x"));
  CHECK(passed(r, "shifted_selection_discards_e1"));
  CHECK(r.find("all_selections_vanish")->status == CheckStatus::info);
}

TEST_CASE("weak quasi-greedy suite") {
  const auto xs = samples(20, 10, 5, 6);
  for (const auto& s : {SpaceSpec::lp(1), SpaceSpec::schreier()}) {
    const auto r = suite_weak_quasi_greedy(s, xs, 0.5);
    CHECK(r.overall);
    CHECK(passed(r, "zero_weak_matches_suppression"));
    CHECK(passed(r, "unit_weak_matches_greedy"));
  }
  CHECK(suite_weak_quasi_greedy(SpaceSpec::signed_subsequence(), xs, 0.5).overall);
}

TEST_CASE("suites are deterministic") {
  const auto xs = samples(20, 10, 6, 7);
  const auto a = to_json(suite_coefficient_bounds(SpaceSpec::schreier(), 1.0, xs));
  const auto b = to_json(suite_coefficient_bounds(SpaceSpec::schreier(), 1.0, xs));
  CHECK(a == b);
}
