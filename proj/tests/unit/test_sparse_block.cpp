#include <doctest.h>

#include <cmath>

#include "greedylab/error.hpp"
#include "greedylab/space.hpp"
#include "greedylab/sparse_block.hpp"

using namespace greedylab;

namespace {
const WeightFunction half_n = WeightFunction::power(-1).scaled(0.5);
const WeightFunction two_pow = WeightFunction::geometric(0.5);
}  // namespace

TEST_CASE("certified construction for f = 2^-n, g = n/2") {
  CHECK(sparse_block_n0(half_n) == 6);
  const auto s = build_sparse_block_space(two_pow, half_n, 2, SparseBlockMode::certified_mode());
  CHECK(s.sparse_meta().certified);
  CHECK(s.sparse_meta().n0 == 6.0);
  const auto& L = *s.layout();
  REQUIRE(L.num_blocks() == 2);
  CHECK(*L.size(1).exact == 192);
  CHECK(L.size(2).log_value > std::log(96.0) + 192 * std::log(2.0) - 1e-9);
  CHECK(s.scales()[0] == doctest::Approx(std::log(3.0) / 192.0).epsilon(1e-14));
  CHECK(s.scales()[1] > 0.0);
  CHECK(s.scales()[1] < 1e-50);
  CHECK(*L.start(2) == 193);
}

TEST_CASE("a third certified block overflows") {
  try {
    (void)build_sparse_block_space(two_pow, half_n, 3, SparseBlockMode::certified_mode());
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::overflow);
  }
}

TEST_CASE("surrogate sizes are used verbatim") {
  const auto s = build_sparse_block_space(two_pow, half_n, 0, SparseBlockMode::surrogate({6, 20, 50}));
  CHECK_FALSE(s.sparse_meta().certified);
  CHECK(s.layout()->num_blocks() == 2);
  CHECK(*s.layout()->size(2).exact == 50);
  CHECK(s.scales()[1] == doctest::Approx(std::log(10.0) / 50.0));
}

TEST_CASE("sparseness examples") {
  CHECK(check_sparseness(WeightFunction::constant(0), WeightFunction::power(-1), 10, 40).passed);
  CHECK(check_sparseness(two_pow, half_n, 10, 40).passed);
  CHECK(check_sparseness(WeightFunction::geometric(3), WeightFunction::power(-1).scaled(2.0 / 3.0), 10, 40).passed);
  const auto regular = check_sparseness(WeightFunction::constant(1), half_n, 10, 40);
  CHECK_FALSE(regular.passed);
  CHECK(regular.worst_ratio > 1.0);
  CHECK_FALSE(regular.witness.empty());
  CHECK_FALSE(check_sparseness(WeightFunction::power(2), half_n, 10, 40).passed);
}

TEST_CASE("certified mode refuses a function that is not sparse") {
  try {
    (void)build_sparse_block_space(WeightFunction::constant(1), half_n, 1, SparseBlockMode::certified_mode());
    FAIL("expected not_sparse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_sparse);
  }
}
