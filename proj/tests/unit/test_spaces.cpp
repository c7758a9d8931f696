#include <doctest.h>

#include <cmath>
#include <random>

#include "greedylab/error.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/samples.hpp"
#include "greedylab/space.hpp"
#include "greedylab/sparse_block.hpp"
#include "oracles.hpp"

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

FiniteVector ones(Index first, Index last, Index dim = kUnboundedDim) {
  FiniteVector x(dim);
  for (Index n = first; n <= last; ++n) x.set(n, 1.0);
  return x;
}

std::vector<SpaceSpec> every_kind() {
  return {SpaceSpec::lp(1.0),
          SpaceSpec::lp(1.5),
          SpaceSpec::lp(2.0),
          SpaceSpec::lp(4.0),
          SpaceSpec::c0_sup(),
          SpaceSpec::schreier(),
          SpaceSpec::alternating_tail_l1_sum({2, 3, 5, 8}),
          SpaceSpec::signed_subsequence(),
          SpaceSpec::weighted_mixed(),
          build_sparse_block_space(WeightFunction::geometric(0.5), WeightFunction::power(-1).scaled(0.5), 1,
                                   SparseBlockMode::surrogate({6, 18})),
          SpaceSpec::generic_block_sum(BlockSumMode::l1, {4, 14}, {SpaceSpec::schreier(), SpaceSpec::lp(3)}),
          SpaceSpec::generic_block_sum(BlockSumMode::c0, {6, 12},
                                       {SpaceSpec::signed_subsequence(), SpaceSpec::weighted_mixed()})};
}

}  // namespace

TEST_CASE("Schreier norm matches enumeration of admissible sets") {
  for (const auto& x : samples(100, 20, 12, 11)) {
    CHECK(eval_norm(SpaceSpec::schreier(), x) == doctest::Approx(oracle::schreier(x, 20)).epsilon(1e-12));
  }
  CHECK(eval_norm(SpaceSpec::schreier(), ones(1, 4)) == 2.0);
  for (Index m = 1; m <= 12; ++m) {
    CHECK(eval_norm(SpaceSpec::schreier(), ones(1, m)) == static_cast<double>((m + 1) / 2));
  }
}

TEST_CASE("signed subsequence DP matches subsequence enumeration") {
  for (const auto& x : samples(100, 12, 12, 12)) {
    CHECK(eval_norm(SpaceSpec::signed_subsequence(), x) ==
          doctest::Approx(oracle::signed_subsequence(x, 12)).epsilon(1e-12));
  }
  for (Index m = 1; m <= 20; ++m) CHECK(eval_norm(SpaceSpec::signed_subsequence(), ones(1, m)) == 1.0);
}

TEST_CASE("weighted mixed rearrangement matches brute force") {
  for (const auto& x : samples(40, 30, 7, 13)) {
    CHECK(eval_norm(SpaceSpec::weighted_mixed(), x) == doctest::Approx(oracle::weighted_mixed(x)).epsilon(1e-12));
  }
  const auto f = WeightFunction::power(0.5);
  const IndexSet A{3, 8, 9, 40, 41, 77};
  CHECK(eval_norm(SpaceSpec::weighted_mixed(), indicator(A, std::nullopt, &f)) ==
        doctest::Approx(std::sqrt(harmonic_number(6))).epsilon(1e-12));
}

TEST_CASE("tail-sum blocks add up") {
  const auto X = SpaceSpec::alternating_tail_l1_sum({2, 3, 5});
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(10);
    FiniteVector x(10);
    for (Index n = 1; n <= 10; ++n) {
      v[n - 1] = nd(rng);
      x.set(n, v[n - 1]);
    }
    const double expect = oracle::tail_block({v[0], v[1]}) + oracle::tail_block({v[2], v[3], v[4]}) +
                          oracle::tail_block({v[5], v[6], v[7], v[8], v[9]});
    CHECK(eval_norm(X, x) == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(eval_norm(X, ones(1, 10, 10)) == 10.0);
}

TEST_CASE("zero vector has norm zero in every space") {
  for (const auto& s : every_kind()) CHECK(eval_norm(s, FiniteVector(s.max_index())) == 0.0);
}

TEST_CASE("norm axioms on sampled vectors") {
  for (const auto& s : every_kind()) {
    CAPTURE(s.describe());
    const auto xs = samples(30, std::min<Index>(18, s.max_index()), 8, 21);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const auto& x = xs[i];
      const auto& y = xs[i + 1];
      const double nx = eval_norm(s, x), ny = eval_norm(s, y);
      CHECK(nx > 0.0);
      CHECK(eval_norm(s, x.scaled(-2.5)) == doctest::Approx(2.5 * nx).epsilon(1e-12));
      CHECK(eval_norm(s, x + y) <= nx + ny + 1e-12);
    }
  }
}

TEST_CASE("block sums combine inner norms") {
  const auto l1 = SpaceSpec::generic_block_sum(BlockSumMode::l1, {4, 6}, {SpaceSpec::lp(2), SpaceSpec::schreier()});
  const auto c0 = SpaceSpec::generic_block_sum(BlockSumMode::c0, {4, 6}, {SpaceSpec::lp(2), SpaceSpec::schreier()});
  const FiniteVector x({{1, 3.0}, {2, 4.0}, {5, 1.0}, {6, 1.0}, {7, 1.0}}, 10);
  const double a = 5.0, b = eval_norm(SpaceSpec::schreier(), ones(1, 3));
  CHECK(eval_norm(l1, x) == doctest::Approx(a + b));
  CHECK(eval_norm(c0, x) == doctest::Approx(std::max(a, b)));
}

TEST_CASE("one sparse block is max of sup and scaled l1") {
  const auto s = build_sparse_block_space(WeightFunction::geometric(0.5), WeightFunction::power(-1).scaled(0.5), 1,
                                          SparseBlockMode::surrogate({6, 20}));
  CHECK_FALSE(s.sparse_meta().certified);
  const double scale = std::log(3.0) / 20.0;
  for (const auto& x : samples(50, 20, 20, 4)) {
    double sup = 0.0, l1 = 0.0;
    for (const auto& e : x.entries()) {
      sup = std::max(sup, std::abs(e.value));
      l1 += std::abs(e.value);
    }
    CHECK(eval_norm(s, x) == doctest::Approx(std::max(sup, scale * l1)).epsilon(1e-12));
  }
}

TEST_CASE("indices outside the layout are rejected") {
  const auto X = SpaceSpec::alternating_tail_l1_sum({2, 3});
  try {
    (void)eval_norm(X, FiniteVector({{6, 1.0}}, 6));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::out_of_layout);
    CHECK(std::string(e.what()).find('6') != std::string::npos);
  }
  CHECK_THROWS_AS(SpaceSpec::lp(0.5), Error);
  CHECK_THROWS_AS(SpaceSpec::alternating_tail_l1_sum({3, 2}), Error);
}

TEST_CASE("weight functions round trip through their text form") {
  for (const auto& f : {WeightFunction::constant(2), WeightFunction::alternating(), WeightFunction::reciprocal(),
                        WeightFunction::power(0.5), WeightFunction::geometric(0.5).scaled(3.0)}) {
    CHECK(WeightFunction::parse(f.describe()) == f);
  }
  CHECK(WeightFunction::alternating()(3) == -1.0);
  CHECK(WeightFunction::power(-1).scaled(0.5)(6) == 3.0);
  CHECK_THROWS_AS(WeightFunction::parse("bogus:1"), Error);
}

TEST_CASE("block layout addressing") {
  const auto L = BlockLayout::from_sizes(std::vector<std::uint64_t>{2, 3, 5});
  CHECK(*L.start(2) == 3);
  CHECK(*L.last(3) == 10);
  CHECK(L.locate(4)->block == 2);
  CHECK(L.locate(4)->offset == 2);
  CHECK_FALSE(L.locate(11));
  CHECK(L.to_index(3, 5) == 10);
  CHECK_THROWS_AS(L.to_index(2, 4), Error);
}
