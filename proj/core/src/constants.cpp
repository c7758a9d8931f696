#include "greedylab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "greedylab/combinatorics.hpp"
#include "greedylab/error.hpp"
#include "greedylab/parallel.hpp"

namespace greedylab {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::vector<Entry> weighted(std::span<const Index> set, std::span<const int> signs, const WeightFunction* f) {
  std::vector<Entry> out;
  out.reserve(set.size());
  for (std::size_t j = 0; j < set.size(); ++j) {
    double v = f ? (*f)(j + 1) : 1.0;
    if (!signs.empty()) v *= signs[j];
    if (v != 0.0) out.push_back({set[j], v});
  }
  return out;
}

double indicator_norm(const SpaceSpec& space, std::span<const Index> set, const WeightFunction* f,
                      std::span<const int> signs = {}) {
  return eval_norm(space, weighted(set, signs, f));
}

IndexSet from_mask(std::uint64_t mask) {
  IndexSet s;
  for (Index n = 0; mask; ++n, mask >>= 1) {
    if (mask & 1) s.push_back(n + 1);
  }
  return s;
}

/// Ratio bookkeeping shared by every estimator; the identity configuration gives 1.
struct Best {
  double value = 1.0;
  ConstantsWitness witness;
  bool seen_zero_denominator = false;

  void offer(double num, double den, const std::function<void(ConstantsWitness&)>& fill) {
    double r;
    if (den == 0.0) {
      if (num == 0.0) return;
      r = HUGE_VAL;
      seen_zero_denominator = true;
    } else {
      r = num / den;
    }
    if (r > value) {
      value = r;
      witness = {};
      witness.numerator = num;
      witness.denominator = den;
      fill(witness);
    }
  }
};

void require_nonzero(const SpaceSpec& space, std::span<const FiniteVector> samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (eval_norm(space, samples[i]) == 0.0) {
      fail(ErrorCode::invalid_argument, "sample " + std::to_string(i) + " has zero norm");
    }
  }
}

/// Runs a per-sample search in parallel and merges the results in sample order.
ConstantsReport per_sample(ConstantKind kind, const SpaceSpec& space, std::span<const FiniteVector> samples,
                           std::string_view description,
                           const std::function<std::uint64_t(const FiniteVector&, double, Best&)>& search) {
  require_nonzero(space, samples);
  std::vector<Best> bests(samples.size());
  std::vector<std::uint64_t> counts(samples.size(), 0);
  parallel_for(samples.size(), [&](std::size_t i) {
    const double xn = eval_norm(space, samples[i]);
    counts[i] = search(samples[i], xn, bests[i]);
  });
  ConstantsReport r;
  r.kind = kind;
  r.space = space.describe();
  r.bound_direction = BoundDirection::lower_bound;
  r.search_scope = std::to_string(samples.size()) + " samples";
  if (!description.empty()) r.search_scope += " (" + std::string(description) + ")";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    r.configurations += counts[i];
    if (bests[i].value > r.estimate) {
      r.estimate = bests[i].value;
      r.witness = bests[i].witness;
    }
    if (bests[i].seen_zero_denominator) r.notes.push_back("a configuration had a zero denominator");
  }
  if (samples.empty()) r.notes.push_back("no samples; estimate floored at the identity configuration");
  return r;
}

}  // namespace

std::string_view to_string(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::democracy: return "democracy";
    case ConstantKind::f_democracy: return "f_democracy";
    case ConstantKind::disjoint_democracy: return "disjoint_democracy";
    case ConstantKind::super_democracy: return "super_democracy";
    case ConstantKind::suppression_unconditional: return "suppression_unconditional";
    case ConstantKind::unconditional: return "unconditional";
    case ConstantKind::quasi_greedy: return "quasi_greedy";
    case ConstantKind::t_quasi_greedy: return "t_quasi_greedy";
    case ConstantKind::abt_quasi_greedy: return "abt_quasi_greedy";
    case ConstantKind::basis_constant: return "basis_constant";
    case ConstantKind::coordinate_product: return "coordinate_product";
  }
  return "unknown";
}

std::string_view to_string(BoundDirection direction) {
  return direction == BoundDirection::lower_bound ? "lower_bound" : "exact_over_enumerated_range";
}

std::string_view to_string(DemocracyFamily family) {
  switch (family) {
    case DemocracyFamily::all_pairs: return "all_pairs";
    case DemocracyFamily::structured: return "structured";
    case DemocracyFamily::disjoint_only: return "disjoint_only";
    case DemocracyFamily::signed_sets: return "signed";
  }
  return "unknown";
}

std::optional<DemocracyFamily> parse_democracy_family(std::string_view name) {
  for (auto f : {DemocracyFamily::all_pairs, DemocracyFamily::structured, DemocracyFamily::disjoint_only,
                 DemocracyFamily::signed_sets}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<IndexSet> structured_sets(const SpaceSpec& space, std::size_t m) {
  std::set<IndexSet> out;
  if (m == 0) return {};
  const Index limit = space.max_index();
  auto add = [&](IndexSet s) {
    if (s.size() == m && s.back() <= limit) out.insert(std::move(s));
  };
  auto progression = [&](Index first, Index step) {
    IndexSet s;
    for (std::size_t j = 0; j < m; ++j) s.push_back(first + step * j);
    return s;
  };
  add(progression(1, 1));
  add(progression(2, 1));
  add(progression(m + 1, 1));
  add(progression(1, 2));
  add(progression(2, 2));
  add(progression(1, 3));
  add(progression(m, 2));
  if (const auto* layout = space.layout()) {
    const std::size_t blocks = std::min<std::size_t>(layout->num_blocks(), 64);
    for (std::size_t k = 1; k <= blocks; ++k) {
      const auto& size = layout->size(k);
      const auto start = layout->start(k);
      if (!start) break;
      if (size.exact && *size.exact < m) continue;
      add(progression(*start, 1));
      if (const auto last = layout->last(k)) add(progression(*last - (m - 1), 1));
    }
    for (std::size_t first = 1; first + m - 1 <= layout->num_blocks() && first <= 2; ++first) {
      IndexSet s;
      for (std::size_t k = first; k < first + m; ++k) {
        const auto st = layout->start(k);
        if (!st) break;
        s.push_back(*st);
      }
      add(std::move(s));
    }
  }
  return {out.begin(), out.end()};
}

ConstantsReport democracy_constant(const SpaceSpec& space, const DemocracyOptions& o) {
  ConstantsReport r;
  r.space = space.describe();
  r.kind = o.f ? ConstantKind::f_democracy : ConstantKind::democracy;
  if (o.f) r.parameters = "f=" + o.f->describe();
  r.parameters += std::string(r.parameters.empty() ? "" : " ") + "family=" + std::string(to_string(o.family));
  const Index h = std::min(o.horizon, space.max_index());
  const std::size_t max_size = std::min<std::size_t>(o.max_size, h);
  Best best;

  switch (o.family) {
    case DemocracyFamily::all_pairs: {
      if (h > 16) fail(ErrorCode::enumeration_cap, "all_pairs democracy needs horizon <= 16");
      r.bound_direction = BoundDirection::exact_over_enumerated_range;
      for (std::size_t s = 1; s <= max_size; ++s) {
        double hi = -1.0, lo = HUGE_VAL;
        IndexSet arg_hi, arg_lo;
        for_each_combination(h, s, [&](std::span<const std::size_t> idx) {
          IndexSet set(s);
          for (std::size_t i = 0; i < s; ++i) set[i] = idx[i] + 1;
          const double v = indicator_norm(space, set, o.f);
          ++r.configurations;
          if (v > hi) {
            hi = v;
            arg_hi = set;
          }
          if (v < lo) {
            lo = v;
            arg_lo = set;
          }
          return true;
        });
        best.offer(hi, lo, [&](ConstantsWitness& w) {
          w.set_a = arg_hi;
          w.set_b = arg_lo;
        });
      }
      r.search_scope = "all pairs |A| = |B| <= " + std::to_string(max_size) + " in [1, " + std::to_string(h) + "]";
      break;
    }
    case DemocracyFamily::disjoint_only: {
      if (h > 24) fail(ErrorCode::enumeration_cap, "disjoint democracy needs horizon <= 24");
      r.bound_direction = BoundDirection::lower_bound;
      const std::uint64_t full = (std::uint64_t{1} << h) - 1;
      std::vector<double> val(std::size_t{1} << h);
      for (std::size_t s = 1; s <= max_size && 2 * s <= h; ++s) {
        // val[mask] = min ||1_{f,B}|| over B within mask with |B| = s
        std::fill(val.begin(), val.end(), HUGE_VAL);
        std::vector<std::pair<std::uint64_t, double>> sized;
        for_each_combination(h, s, [&](std::span<const std::size_t> idx) {
          std::uint64_t mask = 0;
          for (auto i : idx) mask |= std::uint64_t{1} << i;
          const double v = indicator_norm(space, from_mask(mask), o.f);
          val[mask] = v;
          sized.push_back({mask, v});
          ++r.configurations;
          return true;
        });
        for (std::size_t bit = 0; bit < h; ++bit) {
          const std::uint64_t b = std::uint64_t{1} << bit;
          for (std::uint64_t mask = 0; mask <= full; ++mask) {
            if (mask & b) val[mask] = std::min(val[mask], val[mask ^ b]);
          }
        }
        for (const auto& [mask, v] : sized) {
          const double lo = val[full ^ mask];
          if (lo == HUGE_VAL) continue;
          best.offer(v, lo, [&](ConstantsWitness& w) {
            w.set_a = from_mask(mask);
            // recover a minimizing B in the complement
            for_each_combination(h, s, [&](std::span<const std::size_t> idx) {
              std::uint64_t bm = 0;
              for (auto i : idx) bm |= std::uint64_t{1} << i;
              if ((bm & mask) == 0 && indicator_norm(space, from_mask(bm), o.f) == lo) {
                w.set_b = from_mask(bm);
                return false;
              }
              return true;
            });
          });
        }
      }
      r.kind = ConstantKind::disjoint_democracy;
      r.search_scope = "disjoint pairs |A| = |B| <= " + std::to_string(max_size) + " in [1, " + std::to_string(h) + "]";
      break;
    }
    case DemocracyFamily::signed_sets: {
      if (h > 12) fail(ErrorCode::enumeration_cap, "signed democracy needs horizon <= 12");
      r.bound_direction = BoundDirection::lower_bound;
      r.kind = ConstantKind::super_democracy;
      for (std::size_t s = 1; s <= max_size; ++s) {
        double hi = -1.0, lo = HUGE_VAL;
        ConstantsWitness w_hi, w_lo;
        for_each_combination(h, s, [&](std::span<const std::size_t> idx) {
          IndexSet set(s);
          for (std::size_t i = 0; i < s; ++i) set[i] = idx[i] + 1;
          std::vector<int> signs(s);
          for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << s); ++pattern) {
            for (std::size_t i = 0; i < s; ++i) signs[i] = (pattern >> i) & 1 ? -1 : 1;
            const double v = indicator_norm(space, set, o.f, signs);
            ++r.configurations;
            if (v > hi) {
              hi = v;
              w_hi.set_a = set;
              w_hi.signs_a = signs;
            }
            if (v < lo) {
              lo = v;
              w_lo.set_a = set;
              w_lo.signs_a = signs;
            }
          }
          return true;
        });
        best.offer(hi, lo, [&](ConstantsWitness& w) {
          w.set_a = w_hi.set_a;
          w.signs_a = w_hi.signs_a;
          w.set_b = w_lo.set_a;
          w.signs_b = w_lo.signs_a;
        });
      }
      r.search_scope = "signed pairs |A| = |B| <= " + std::to_string(max_size) + " in [1, " + std::to_string(h) + "]";
      break;
    }
    case DemocracyFamily::structured: {
      r.bound_direction = BoundDirection::lower_bound;
      std::vector<std::size_t> sizes = o.sizes;
      if (sizes.empty()) {
        for (std::size_t s = 1; s <= o.max_size; ++s) sizes.push_back(s);
      }
      std::string list;
      for (auto m : sizes) {
        double hi = -1.0, lo = HUGE_VAL;
        IndexSet arg_hi, arg_lo;
        for (const auto& set : structured_sets(space, m)) {
          const double v = indicator_norm(space, set, o.f);
          ++r.configurations;
          if (v > hi) {
            hi = v;
            arg_hi = set;
          }
          if (v < lo) {
            lo = v;
            arg_lo = set;
          }
        }
        if (hi >= 0.0) {
          best.offer(hi, lo, [&](ConstantsWitness& w) {
            w.set_a = arg_hi;
            w.set_b = arg_lo;
            w.order = m;
          });
        }
        list += (list.empty() ? "" : ",") + std::to_string(m);
      }
      r.search_scope = "intervals, progressions and block-aligned sets of sizes " + list;
      break;
    }
  }
  r.estimate = best.value;
  r.witness = best.witness;
  if (best.seen_zero_denominator) r.notes.push_back("some indicator had norm 0; ratio reported as unbounded");
  if (r.witness.set_a.empty()) r.notes.push_back("estimate floored at 1 by A = B");
  if (o.f) {
    r.notes.push_back("1_{f,A} weights f(j) on the j-th smallest element of A");
    if (const auto reg = o.f->regularity(); reg && space.is_lattice() && o.family != DemocracyFamily::signed_sets) {
      DemocracyOptions plain = o;
      plain.f = nullptr;
      const double cd = democracy_constant(space, plain).estimate;
      const double bound = reg->c2 / reg->c1 * cd;  // K_u = 1 on lattice norms
      r.notes.push_back(std::string("transfer bound (c2/c1) C_d K_u^2 = ") + fmt(bound) +
                        (r.estimate <= bound + 1e-9 ? " holds" : " VIOLATED"));
    }
  }
  return r;
}

ConstantsReport suppression_unconditional_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                                   std::string_view description) {
  auto r = per_sample(ConstantKind::suppression_unconditional, space, samples, description,
                      [&](const FiniteVector& x, double xn, Best& best) -> std::uint64_t {
                        const auto es = x.entries();
                        if (es.size() > 24) fail(ErrorCode::enumeration_cap, "support above 24 for suppression");
                        std::vector<Entry> part;
                        std::uint64_t n = 0;
                        for_each_subset_mask(es.size(), [&](std::uint64_t mask) {
                          part.clear();
                          for (std::size_t i = 0; i < es.size(); ++i) {
                            if (mask >> i & 1) part.push_back(es[i]);
                          }
                          ++n;
                          best.offer(eval_norm(space, part), xn, [&](ConstantsWitness& w) {
                            w.vector = x;
                            for (const auto& e : part) w.set_a.push_back(e.index);
                          });
                        });
                        return n;
                      });
  r.search_scope += ", every A within supp x";
  return r;
}

ConstantsReport unconditional_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                       std::string_view description) {
  auto r = per_sample(ConstantKind::unconditional, space, samples, description,
                      [&](const FiniteVector& x, double xn, Best& best) -> std::uint64_t {
                        const auto es = x.entries();
                        if (es.size() > 24) fail(ErrorCode::enumeration_cap, "support above 24 for sign patterns");
                        std::vector<Entry> flipped(es.begin(), es.end());
                        std::uint64_t n = 0;
                        for_each_subset_mask(es.size(), [&](std::uint64_t mask) {
                          for (std::size_t i = 0; i < es.size(); ++i) {
                            flipped[i].value = (mask >> i & 1) ? -es[i].value : es[i].value;
                          }
                          ++n;
                          best.offer(eval_norm(space, flipped), xn, [&](ConstantsWitness& w) {
                            w.vector = x;
                            for (std::size_t i = 0; i < es.size(); ++i) {
                              w.set_a.push_back(es[i].index);
                              w.signs_a.push_back((mask >> i & 1) ? -1 : 1);
                            }
                          });
                        });
                        return n;
                      });
  r.search_scope += ", every sign pattern on supp x";
  return r;
}

namespace {

ConstantsReport projection_family(ConstantKind kind, const SpaceSpec& space, std::span<const FiniteVector> samples,
                                  std::string_view description,
                                  const std::function<void(const FiniteVector&, std::size_t, const SetVisitor&)>& sets,
                                  std::size_t extra_orders, std::size_t first_order) {
  return per_sample(kind, space, samples, description, [&](const FiniteVector& x, double xn, Best& best) {
    std::uint64_t n = 0;
    const std::size_t top = std::min<std::size_t>(x.support_size() + extra_orders, x.ambient_dim());
    for (std::size_t m = first_order; m <= top; ++m) {
      sets(x, m, [&](std::span<const Index> g) {
        ++n;
        const auto p = project(x, g);
        best.offer(eval_norm(space, p), xn, [&](ConstantsWitness& w) {
          w.vector = x;
          w.order = m;
          w.set_a.assign(g.begin(), g.end());
        });
      });
    }
    return n;
  });
}

}  // namespace

ConstantsReport quasi_greedy_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                      std::string_view description, std::uint64_t cap) {
  auto r = projection_family(
      ConstantKind::quasi_greedy, space, samples, description,
      [&](const FiniteVector& x, std::size_t m, const SetVisitor& v) { for_each_weak_greedy_set(x, m, 1.0, v, cap); },
      0, 1);
  r.search_scope += ", every greedy set of order 1..|supp x|";
  return r;
}

ConstantsReport t_quasi_greedy_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples, double t,
                                        std::string_view description, std::uint64_t cap) {
  auto r = projection_family(
      ConstantKind::t_quasi_greedy, space, samples, description,
      [&](const FiniteVector& x, std::size_t m, const SetVisitor& v) { for_each_weak_greedy_set(x, m, t, v, cap); },
      0, 1);
  r.parameters = "t=" + fmt(t);
  r.search_scope += ", every t-weak greedy set of order 1..|supp x|";
  return r;
}

ConstantsReport abt_quasi_greedy_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                          std::span<const std::uint64_t> a_set, std::span<const std::uint64_t> b_set,
                                          double t, std::string_view description, std::uint64_t cap) {
  if (a_set.empty() || b_set.empty()) fail(ErrorCode::invalid_argument, "A and B must be nonempty");
  const std::uint64_t max_a = *std::max_element(a_set.begin(), a_set.end());
  const std::uint64_t max_b = *std::max_element(b_set.begin(), b_set.end());
  const std::uint64_t min_a = *std::min_element(a_set.begin(), a_set.end());
  auto r = projection_family(
      ConstantKind::abt_quasi_greedy, space, samples, description,
      [&](const FiniteVector& x, std::size_t m, const SetVisitor& v) {
        // A set may qualify for several (a, b); report it once.
        std::set<IndexSet> seen;
        for (auto a : a_set) {
          if (m < a) continue;
          for (auto b : b_set) {
            for_each_abt_weak_greedy_set(
                x, m, a, b, t,
                [&](std::span<const Index> g) {
                  if (seen.emplace(g.begin(), g.end()).second) v(g);
                },
                cap);
          }
        }
      },
      static_cast<std::size_t>(max_b), static_cast<std::size_t>(min_a));
  std::string as, bs;
  for (auto a : a_set) as += (as.empty() ? "" : ",") + std::to_string(a);
  for (auto b : b_set) bs += (bs.empty() ? "" : ",") + std::to_string(b);
  r.parameters = "A={" + as + "} B={" + bs + "} t=" + fmt(t);
  r.search_scope += ", orders " + std::to_string(min_a) + "..|supp x|+" + std::to_string(max_b) +
                    " (max A = " + std::to_string(max_a) + ")";
  return r;
}

ConstantsReport basis_constant_estimate(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                        std::string_view description) {
  auto r = per_sample(ConstantKind::basis_constant, space, samples, description,
                      [&](const FiniteVector& x, double xn, Best& best) -> std::uint64_t {
                        std::uint64_t n = 0;
                        for (const auto& e : x.entries()) {
                          const auto s = partial_sum(x, e.index);
                          ++n;
                          best.offer(eval_norm(space, s), xn, [&](ConstantsWitness& w) {
                            w.vector = x;
                            w.index = e.index;
                          });
                        }
                        return n;
                      });
  r.search_scope += ", every N in supp x";
  return r;
}

ConstantsReport coordinate_product(const SpaceSpec& space, Index horizon, std::span<const FiniteVector> samples,
                                   std::string_view description) {
  require_nonzero(space, samples);
  const Index h = std::min(horizon, space.max_index());
  if (h > 10'000'000) fail(ErrorCode::invalid_argument, "coordinate product horizon above 10^7");
  ConstantsReport r;
  r.kind = ConstantKind::coordinate_product;
  r.space = space.describe();
  r.bound_direction = BoundDirection::lower_bound;
  // best |e_n^*(x)| / ||x|| per coordinate, starting from e_n itself
  std::vector<double> unit_norm(h), dual(h);
  for (Index n = 1; n <= h; ++n) {
    const Entry e{n, 1.0};
    unit_norm[n - 1] = eval_norm(space, std::span<const Entry>(&e, 1));
    dual[n - 1] = 1.0 / unit_norm[n - 1];
  }
  std::vector<std::optional<std::size_t>> source(h);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double xn = eval_norm(space, samples[i]);
    for (const auto& e : samples[i].entries()) {
      if (e.index > h) continue;
      const double v = std::abs(e.value) / xn;
      if (v > dual[e.index - 1]) {
        dual[e.index - 1] = v;
        source[e.index - 1] = i;
      }
    }
  }
  r.estimate = 0.0;
  for (Index n = 1; n <= h; ++n) {
    ++r.configurations;
    const double v = unit_norm[n - 1] * dual[n - 1];
    if (v > r.estimate) {
      r.estimate = v;
      r.witness = {};
      r.witness.index = n;
      r.witness.numerator = unit_norm[n - 1];
      r.witness.denominator = 1.0 / dual[n - 1];
      if (source[n - 1]) r.witness.vector = samples[*source[n - 1]];
    }
  }
  r.search_scope = "n <= " + std::to_string(h) + ", unit vectors plus " + std::to_string(samples.size()) + " samples";
  if (!description.empty()) r.search_scope += " (" + std::string(description) + ")";
  return r;
}

}  // namespace greedylab
