#include "greedylab/sparse_block.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "greedylab/error.hpp"
#include "numeric.hpp"

namespace greedylab {

namespace {

constexpr std::uint64_t kN0ScanLimit = 1'000'000;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double next_size(double n) { return n < 9.0e15 ? n + 1.0 : std::nextafter(n, HUGE_VAL); }

}  // namespace

SparsenessReport check_sparseness(const WeightFunction& f, const WeightFunction& g, std::uint64_t max_set_size,
                                  std::uint64_t index_horizon) {
  if (index_horizon == 0 || index_horizon > 10'000'000) {
    fail(ErrorCode::invalid_argument, "sparseness horizon must lie in [1, 10^7]");
  }
  SparsenessReport r;
  r.max_set_size = std::min(max_set_size, index_horizon);
  r.index_horizon = index_horizon;

  // Sampled growth conditions on g.
  std::vector<double> samples;
  for (int j = 0; j <= 40; ++j) samples.push_back(std::ldexp(1.0, j));
  bool positive = true;
  bool nondecreasing_tail = true;
  bool ratio_nonincreasing = true;
  double min_ratio = HUGE_VAL;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const double gv = g.at(samples[j]);
    if (!(gv > 0.0)) positive = false;
    if (j > 20 && gv < g.at(samples[j - 1])) nondecreasing_tail = false;
    if (j > 0 && gv / samples[j] > g.at(samples[j - 1]) / samples[j - 1]) ratio_nonincreasing = false;
    min_ratio = std::min(min_ratio, gv / samples[j]);
  }
  const double g_far = g.at(samples.back());
  r.unbounded = positive && nondecreasing_tail && g_far > std::numbers::e && g_far > 1.5 * g.at(samples[20]);
  r.ratio_condition = positive && (ratio_nonincreasing || min_ratio > 0.0);
  if (!positive) r.notes.push_back("g is not positive at every sampled n = 2^j");
  r.notes.push_back("growth conditions on g are sampled at n = 2^j, j <= 40");

  // Exact worst set of each size.
  std::vector<std::pair<double, Index>> mags;
  mags.reserve(index_horizon);
  for (Index n = 1; n <= index_horizon; ++n) mags.push_back({std::abs(f(n)), n});
  std::stable_sort(mags.begin(), mags.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  r.set_condition = true;
  r.worst_ratio = 0.0;
  for (std::uint64_t k = 1; k <= r.max_set_size; ++k) {
    const double factor = g(k) / static_cast<double>(k);
    for (std::size_t p = 0; p + k <= mags.size(); ++p) {
      const double top = mags[p].first;
      detail::CompensatedSum s;
      for (std::size_t q = p; q < p + k; ++q) s.add(mags[q].first);
      const double rhs = factor * s.value();
      double ratio = 0.0;
      if (top > 0.0) {
        ratio = rhs / top;
      } else if (rhs > 0.0) {
        ratio = HUGE_VAL;
      }
      if (ratio > r.worst_ratio) {
        r.worst_ratio = ratio;
        r.witness.clear();
        for (std::size_t q = p; q < p + k; ++q) r.witness.push_back(mags[q].second);
        std::sort(r.witness.begin(), r.witness.end());
      }
      if (top == 0.0) break;  // every later window is zero too
    }
  }
  if (r.worst_ratio > 1.0 + 1e-12) r.set_condition = false;
  r.passed = r.unbounded && r.ratio_condition && r.set_condition;
  return r;
}

std::uint64_t sparse_block_n0(const WeightFunction& g) {
  std::uint64_t last_bad = 0;
  for (std::uint64_t n = 1; n <= kN0ScanLimit; ++n) {
    if (!(g(n) > std::numbers::e)) last_bad = n;
  }
  if (last_bad == kN0ScanLimit) fail(ErrorCode::invalid_argument, "g does not exceed e within n <= 10^6");
  return last_bad + 1;
}

SpaceSpec build_sparse_block_space(const WeightFunction& f, const WeightFunction& g, std::size_t num_blocks,
                               const SparseBlockMode& mode) {
  SparseBlockMeta meta;
  meta.f = f.describe();
  meta.g = g.describe();
  meta.certified = mode.certified;

  std::vector<double> sizes;  // N_0, N_1, ...
  if (mode.certified) {
    if (num_blocks == 0) fail(ErrorCode::invalid_argument, "need at least one block");
    const auto sparse = check_sparseness(f, g, 10, 40);
    if (!sparse.passed) {
      fail(ErrorCode::not_sparse, "f = " + meta.f + " is not sparse with g = " + meta.g +
                                      " (worst ratio " + fmt(sparse.worst_ratio) + ")");
    }
    sizes.push_back(static_cast<double>(sparse_block_n0(g)));
    std::optional<double> c;
    if (auto inf = g.ratio_infimum(); inf && *inf > 0.0) c = *inf / 2.0;
    for (std::size_t k = 1; k <= num_blocks; ++k) {
      const double prev = sizes.back();
      const double log_g = std::log(g.at(prev));
      double n = g.at(prev) * std::exp2(prev);
      if (c) n = std::max(n, 3.0 / *c * log_g);
      n = std::max(std::ceil(n), next_size(prev));
      if (!std::isfinite(n)) {
        fail(ErrorCode::overflow, "certified N_" + std::to_string(k) + " exceeds the double range; use at most " +
                                      std::to_string(k - 1) + " blocks or surrogate mode");
      }
      int guard = 0;
      while (!(g.at(n) > 3.0 * log_g)) {
        n = next_size(n);
        if (++guard > 10'000'000) fail(ErrorCode::overflow, "no N_" + std::to_string(k) + " found with g(N) > 3 log g(N_prev)");
      }
      sizes.push_back(n);
    }
    if (c) meta.notes.push_back("inf g(n)/n > c with c = " + fmt(*c));
  } else {
    sizes = mode.n_list;
    if (sizes.size() < 2) fail(ErrorCode::invalid_argument, "surrogate mode needs N_0 and at least one block size");
    if (num_blocks != 0 && num_blocks != sizes.size() - 1) {
      fail(ErrorCode::invalid_argument, "surrogate N list has " + std::to_string(sizes.size() - 1) +
                                            " block sizes but " + std::to_string(num_blocks) + " blocks were requested");
    }
    meta.notes.push_back("surrogate sizes, not certified by the construction");
  }

  meta.n0 = sizes.front();
  std::vector<BlockSize> blocks;
  std::vector<double> log_scales;
  for (std::size_t k = 1; k < sizes.size(); ++k) {
    const double gk = g.at(sizes[k - 1]);
    if (!(gk > 1.0)) {
      fail(ErrorCode::invalid_argument, "log g(N_" + std::to_string(k - 1) + ") must be positive");
    }
    blocks.push_back(BlockSize::of_real(sizes[k]));
    const double ls = std::log(std::log(gk)) - std::log(sizes[k]);
    log_scales.push_back(ls);
    if (std::exp(ls) == 0.0) {
      meta.notes.push_back("l1 weight of block " + std::to_string(k) + " underflows to 0");
    } else if (!blocks.back().exact) {
      meta.notes.push_back("block " + std::to_string(k) + " size " + fmt(sizes[k]) +
                           " is not addressable past its first 2^64 indices; its l1 weight is " + fmt(std::exp(ls)));
    }
  }
  return SpaceSpec::sparse_block(BlockLayout(std::move(blocks)), std::move(log_scales), std::move(meta));
}

}  // namespace greedylab
