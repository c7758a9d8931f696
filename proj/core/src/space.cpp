#include "greedylab/space.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "greedylab/error.hpp"
#include "numeric.hpp"

namespace greedylab {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double lp_norm(std::span<const Entry> xs, double p) {
  if (xs.empty()) return 0.0;
  if (p == 1.0) {
    detail::CompensatedSum s;
    for (const auto& e : xs) s.add(std::abs(e.value));
    return s.value();
  }
  double peak = 0.0;
  for (const auto& e : xs) peak = std::max(peak, std::abs(e.value));
  if (peak == 0.0) return 0.0;
  detail::CompensatedSum s;
  if (p == 2.0) {
    for (const auto& e : xs) {
      const double r = e.value / peak;
      s.add(r * r);
    }
    return peak * std::sqrt(s.value());
  }
  for (const auto& e : xs) s.add(std::pow(std::abs(e.value) / peak, p));
  return peak * std::pow(s.value(), 1.0 / p);
}

double sup_norm(std::span<const Entry> xs) {
  double m = 0.0;
  for (const auto& e : xs) m = std::max(m, std::abs(e.value));
  return m;
}

// An optimal admissible set of size s only uses indices >= s and, among them,
// the s largest magnitudes. Between consecutive support indices the eligible
// pool is constant while s grows, so only s = support index needs checking.
double schreier_norm(std::span<const Entry> xs) {
  const std::size_t n = xs.size();
  std::vector<double> pool;  // eligible magnitudes, descending
  pool.reserve(n);
  double best = 0.0;
  for (std::size_t j = n; j-- > 0;) {
    const double v = std::abs(xs[j].value);
    pool.insert(std::upper_bound(pool.begin(), pool.end(), v, std::greater<>()), v);
    const std::size_t take = std::min<std::uint64_t>(xs[j].index, pool.size());
    detail::CompensatedSum acc;
    for (std::size_t k = 0; k < take; ++k) acc.add(pool[k]);
    best = std::max(best, acc.value());
  }
  return best;
}

double tail_block_norm(std::span<const Entry> block) {
  double best = 0.0;
  detail::CompensatedSum tail;
  for (std::size_t j = block.size(); j-- > 0;) {
    tail.add(block[j].value);
    best = std::max({best, std::abs(block[j].value), std::abs(tail.value())});
  }
  return best;
}

// Alternating sums over increasing subsequences; zero coordinates between
// support points can be taken to flip the parity of the next slot for free.
double signed_subsequence_norm(std::span<const Entry> xs) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  // even/odd: number of terms taken so far. Slot i carries sign (-1)^i.
  double hi_even = 0.0, hi_odd = kNegInf;
  double lo_even = 0.0, lo_odd = std::numeric_limits<double>::infinity();
  Index prev = 0;
  for (const auto& e : xs) {
    if (e.index - prev > 1) {
      const double hi = std::max(hi_even, hi_odd);
      hi_even = hi_odd = hi;
      const double lo = std::min(lo_even, lo_odd);
      lo_even = lo_odd = lo;
    }
    const double v = e.value;
    const double ne = std::max(hi_even, hi_odd + v);
    const double no = std::max(hi_odd, hi_even - v);
    const double le = std::min(lo_even, lo_odd + v);
    const double lo = std::min(lo_odd, lo_even - v);
    hi_even = ne;
    hi_odd = no;
    lo_even = le;
    lo_odd = lo;
    prev = e.index;
  }
  const double hi = std::max(hi_even, hi_odd);
  const double lo = std::min(lo_even, lo_odd);
  return std::max(std::abs(hi), std::abs(lo));
}

double weighted_mixed_norm(std::span<const Entry> xs) {
  if (xs.empty()) return 0.0;
  if (xs.size() > 1'000'000) fail(ErrorCode::overflow, "weighted mixed norm supports at most 10^6 nonzeros");
  std::vector<double> mags;
  mags.reserve(xs.size());
  for (const auto& e : xs) mags.push_back(std::abs(e.value));
  std::sort(mags.begin(), mags.end(), std::greater<>());

  detail::CompensatedSum weighted, harmonic;
  double rearranged = 0.0;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    weighted.add(mags[i] / std::sqrt(n));
    harmonic.add(1.0 / n);
    rearranged = std::max(rearranged, weighted.value() / std::sqrt(harmonic.value()));
  }

  double peak = 0.0;
  for (const auto& e : xs) {
    if (e.index % 2 == 0) peak = std::max(peak, std::abs(e.value));
  }
  double even_part = 0.0;
  if (peak > 0.0) {
    detail::CompensatedSum sq;
    for (const auto& e : xs) {
      if (e.index % 2 == 0) {
        const double r = e.value / peak;
        sq.add(r * r);
      }
    }
    even_part = peak * std::sqrt(sq.value());
  }
  return std::max(rearranged, even_part);
}

template <typename Fn>
void for_each_block(const BlockLayout& layout, std::span<const Entry> xs, Fn&& fn) {
  std::size_t i = 0;
  std::vector<Entry> local;
  while (i < xs.size()) {
    const auto loc = layout.locate(xs[i].index);
    if (!loc) fail(ErrorCode::out_of_layout, "index " + std::to_string(xs[i].index) + " lies beyond the last block");
    const auto start = *layout.start(loc->block);
    const auto last = layout.last(loc->block);
    local.clear();
    while (i < xs.size() && (!last || xs[i].index <= *last)) {
      local.push_back({xs[i].index - start + 1, xs[i].value});
      ++i;
    }
    fn(loc->block, std::span<const Entry>(local));
  }
}

}  // namespace

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::lp: return "Lp";
    case SpaceKind::c0_sup: return "C0Sup";
    case SpaceKind::schreier: return "Schreier";
    case SpaceKind::alternating_tail_l1_sum: return "AlternatingTailL1Sum";
    case SpaceKind::signed_subsequence: return "SignedSubsequence";
    case SpaceKind::weighted_mixed: return "WeightedMixed";
    case SpaceKind::sparse_block: return "SparseBlock";
    case SpaceKind::generic_block_sum: return "GenericBlockSum";
  }
  return "unknown";
}

std::optional<SpaceKind> parse_space_kind(std::string_view name) {
  for (auto k : {SpaceKind::lp, SpaceKind::c0_sup, SpaceKind::schreier, SpaceKind::alternating_tail_l1_sum,
                 SpaceKind::signed_subsequence, SpaceKind::weighted_mixed, SpaceKind::sparse_block,
                 SpaceKind::generic_block_sum}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

SpaceSpec SpaceSpec::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) fail(ErrorCode::invalid_argument, "Lp needs finite p >= 1, got " + fmt(p));
  SpaceSpec s;
  s.kind_ = SpaceKind::lp;
  s.p_ = p;
  return s;
}

SpaceSpec SpaceSpec::c0_sup() {
  SpaceSpec s;
  s.kind_ = SpaceKind::c0_sup;
  return s;
}

SpaceSpec SpaceSpec::schreier() {
  SpaceSpec s;
  s.kind_ = SpaceKind::schreier;
  return s;
}

SpaceSpec SpaceSpec::alternating_tail_l1_sum(std::vector<std::uint64_t> block_sizes) {
  if (block_sizes.empty()) fail(ErrorCode::invalid_argument, "AlternatingTailL1Sum needs at least one block");
  SpaceSpec s;
  s.kind_ = SpaceKind::alternating_tail_l1_sum;
  s.layout_ = BlockLayout::from_sizes(block_sizes);
  if (!s.layout_.strictly_increasing()) {
    fail(ErrorCode::invalid_argument, "AlternatingTailL1Sum block sizes must be strictly increasing");
  }
  return s;
}

SpaceSpec SpaceSpec::signed_subsequence() {
  SpaceSpec s;
  s.kind_ = SpaceKind::signed_subsequence;
  return s;
}

SpaceSpec SpaceSpec::weighted_mixed() {
  SpaceSpec s;
  s.kind_ = SpaceKind::weighted_mixed;
  return s;
}

SpaceSpec SpaceSpec::sparse_block(BlockLayout layout, std::vector<double> log_scales, SparseBlockMeta meta) {
  if (layout.num_blocks() == 0) fail(ErrorCode::invalid_argument, "SparseBlock needs at least one block");
  if (log_scales.size() != layout.num_blocks()) {
    fail(ErrorCode::invalid_argument, "SparseBlock needs one scale factor per block");
  }
  if (!layout.strictly_increasing()) fail(ErrorCode::invalid_argument, "SparseBlock sizes must be strictly increasing");
  SpaceSpec s;
  s.kind_ = SpaceKind::sparse_block;
  s.layout_ = std::move(layout);
  for (double ls : log_scales) {
    if (!std::isfinite(ls)) fail(ErrorCode::invalid_argument, "SparseBlock scale factors must be positive");
    s.scales_.push_back(std::exp(ls));
  }
  s.log_scales_ = std::move(log_scales);
  s.meta_ = std::move(meta);
  return s;
}

SpaceSpec SpaceSpec::generic_block_sum(BlockSumMode mode, std::vector<std::uint64_t> block_sizes,
                                       std::vector<SpaceSpec> blocks) {
  if (blocks.empty() || blocks.size() != block_sizes.size()) {
    fail(ErrorCode::invalid_argument, "GenericBlockSum needs one inner space per block");
  }
  SpaceSpec s;
  s.kind_ = SpaceKind::generic_block_sum;
  s.mode_ = mode;
  s.layout_ = BlockLayout::from_sizes(block_sizes);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].max_index() < block_sizes[k]) {
      fail(ErrorCode::invalid_argument, "inner space of block " + std::to_string(k + 1) + " is smaller than the block");
    }
  }
  s.inner_ = std::move(blocks);
  return s;
}

const BlockLayout* SpaceSpec::layout() const noexcept {
  switch (kind_) {
    case SpaceKind::alternating_tail_l1_sum:
    case SpaceKind::sparse_block:
    case SpaceKind::generic_block_sum: return &layout_;
    default: return nullptr;
  }
}

Index SpaceSpec::max_index() const {
  const auto* l = layout();
  if (!l) return kUnboundedDim;
  return l->total().value_or(kUnboundedDim);
}

bool SpaceSpec::is_lattice() const {
  switch (kind_) {
    case SpaceKind::lp:
    case SpaceKind::c0_sup:
    case SpaceKind::schreier:
    case SpaceKind::weighted_mixed:
    case SpaceKind::sparse_block: return true;
    case SpaceKind::alternating_tail_l1_sum:
    case SpaceKind::signed_subsequence: return false;
    case SpaceKind::generic_block_sum:
      return std::all_of(inner_.begin(), inner_.end(), [](const SpaceSpec& s) { return s.is_lattice(); });
  }
  return false;
}

std::optional<std::uint64_t> SpaceSpec::exchange_class(Index n) const {
  switch (kind_) {
    case SpaceKind::lp:
    case SpaceKind::c0_sup: return 0;
    case SpaceKind::weighted_mixed: return n % 2;
    case SpaceKind::sparse_block: {
      const auto loc = layout_.locate(n);
      if (!loc) return std::nullopt;
      return loc->block;
    }
    case SpaceKind::generic_block_sum: {
      const auto loc = layout_.locate(n);
      if (!loc) return std::nullopt;
      const auto inner = inner_[loc->block - 1].exchange_class(loc->offset);
      if (!inner) return std::nullopt;
      return (static_cast<std::uint64_t>(loc->block) << 8) | (*inner & 0xff);
    }
    default: return std::nullopt;
  }
}

void SpaceSpec::validate(const FiniteVector& x) const {
  const auto* l = layout();
  if (!l) return;
  for (const auto& e : x.entries()) {
    const auto loc = l->locate(e.index);
    if (!loc) {
      const auto total = l->total();
      fail(ErrorCode::out_of_layout,
           "index " + std::to_string(e.index) + " lies beyond block " + std::to_string(l->num_blocks()) +
               (total ? " (last index " + std::to_string(*total) + ")" : std::string()));
    }
    if (kind_ == SpaceKind::generic_block_sum) {
      const auto& inner = inner_[loc->block - 1];
      if (loc->offset > inner.max_index()) {
        fail(ErrorCode::out_of_layout, "index " + std::to_string(e.index) + " (block " + std::to_string(loc->block) +
                                           ", offset " + std::to_string(loc->offset) + ") exceeds the inner space");
      }
    }
  }
}

std::string SpaceSpec::describe() const {
  std::string out(to_string(kind_));
  auto sizes = [this] {
    std::string s = "[";
    for (std::size_t k = 0; k < layout_.num_blocks(); ++k) {
      if (k) s += ",";
      const auto& b = layout_.sizes()[k];
      s += b.exact ? std::to_string(*b.exact) : "exp(" + fmt(b.log_value) + ")";
    }
    return s + "]";
  };
  switch (kind_) {
    case SpaceKind::lp: out += "(p=" + fmt(p_) + ")"; break;
    case SpaceKind::alternating_tail_l1_sum: out += "(N=" + sizes() + ")"; break;
    case SpaceKind::sparse_block:
      out += std::string("(") + (meta_.certified ? "certified" : "surrogate") + ", N0=" + fmt(meta_.n0) +
             ", N=" + sizes() + ")";
      break;
    case SpaceKind::generic_block_sum: {
      out += std::string("(") + (mode_ == BlockSumMode::l1 ? "l1" : "c0") + ", N=" + sizes() + ", [";
      for (std::size_t k = 0; k < inner_.size(); ++k) {
        if (k) out += ",";
        out += inner_[k].describe();
      }
      out += "])";
      break;
    }
    default: break;
  }
  return out;
}

bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
  return a.kind_ == b.kind_ && a.p_ == b.p_ && a.layout_ == b.layout_ && a.log_scales_ == b.log_scales_ &&
         a.meta_.certified == b.meta_.certified && a.meta_.n0 == b.meta_.n0 && a.mode_ == b.mode_ &&
         a.inner_ == b.inner_;
}

double eval_norm(const SpaceSpec& space, std::span<const Entry> xs) {
  switch (space.kind()) {
    case SpaceKind::lp: return lp_norm(xs, space.p());
    case SpaceKind::c0_sup: return sup_norm(xs);
    case SpaceKind::schreier: return schreier_norm(xs);
    case SpaceKind::signed_subsequence: return signed_subsequence_norm(xs);
    case SpaceKind::weighted_mixed: return weighted_mixed_norm(xs);
    case SpaceKind::alternating_tail_l1_sum: {
      detail::CompensatedSum total;
      for_each_block(*space.layout(), xs, [&](std::size_t, std::span<const Entry> b) { total.add(tail_block_norm(b)); });
      return total.value();
    }
    case SpaceKind::sparse_block: {
      double best = 0.0;
      const auto scales = space.scales();
      for_each_block(*space.layout(), xs, [&](std::size_t k, std::span<const Entry> b) {
        double peak = 0.0;
        detail::CompensatedSum l1;
        for (const auto& e : b) {
          peak = std::max(peak, std::abs(e.value));
          l1.add(std::abs(e.value));
        }
        best = std::max({best, peak, scales[k - 1] * l1.value()});
      });
      return best;
    }
    case SpaceKind::generic_block_sum: {
      const auto inner = space.inner_spaces();
      if (space.block_sum_mode() == BlockSumMode::l1) {
        detail::CompensatedSum total;
        for_each_block(*space.layout(), xs,
                       [&](std::size_t k, std::span<const Entry> b) { total.add(eval_norm(inner[k - 1], b)); });
        return total.value();
      }
      double best = 0.0;
      for_each_block(*space.layout(), xs,
                     [&](std::size_t k, std::span<const Entry> b) { best = std::max(best, eval_norm(inner[k - 1], b)); });
      return best;
    }
  }
  return 0.0;
}

double eval_norm(const SpaceSpec& space, const FiniteVector& x) {
  space.validate(x);
  return eval_norm(space, x.entries());
}

double harmonic_number(std::uint64_t n) {
  if (n > 1'000'000) fail(ErrorCode::overflow, "harmonic numbers are summed directly only up to n = 10^6");
  detail::CompensatedSum s;
  for (std::uint64_t i = 1; i <= n; ++i) s.add(1.0 / static_cast<double>(i));
  return s.value();
}

}  // namespace greedylab
