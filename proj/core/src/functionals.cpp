#include "greedylab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "greedylab/combinatorics.hpp"
#include "greedylab/error.hpp"
#include "greedylab/minimize.hpp"

namespace greedylab {

namespace {

constexpr Index kMaxHorizonScan = 10'000'000;

struct CapExceeded {};

std::vector<Entry> strip_zeros(std::vector<Entry> v) {
  std::erase_if(v, [](const Entry& e) { return e.value == 0.0; });
  return v;
}

/// x - sum_A a_n e_n as sorted nonzero entries.
std::vector<Entry> residual(std::span<const Entry> xs, std::span<const Index> set, std::span<const double> coeffs) {
  std::vector<Entry> out;
  out.reserve(xs.size() + set.size());
  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < set.size()) {
    if (j == set.size() || (i < xs.size() && xs[i].index < set[j])) {
      out.push_back(xs[i++]);
    } else if (i == xs.size() || set[j] < xs[i].index) {
      out.push_back({set[j], -coeffs[j]});
      ++j;
    } else {
      out.push_back({xs[i].index, xs[i].value - coeffs[j]});
      ++i;
      ++j;
    }
  }
  return strip_zeros(std::move(out));
}

/// Indices of [1, horizon] grouped for candidate generation. Off-support
/// indices sharing an exchange class are interchangeable in every norm value.
struct Universe {
  Index horizon = 0;
  std::vector<Entry> support;
  std::vector<IndexSet> classes;
  IndexSet singles;
  std::size_t off_count = 0;

  IndexSet first_off(std::size_t count) const {
    IndexSet out;
    std::size_t s = 0;
    for (Index n = 1; n <= horizon && out.size() < count; ++n) {
      while (s < support.size() && support[s].index < n) ++s;
      if (s < support.size() && support[s].index == n) continue;
      out.push_back(n);
    }
    return out;
  }
};

Universe build_universe(const SpaceSpec& space, const FiniteVector& x, Index horizon) {
  Universe u;
  u.horizon = horizon;
  u.support.assign(x.entries().begin(), x.entries().end());
  std::map<std::uint64_t, std::size_t> slot;
  std::size_t s = 0;
  for (Index n = 1; n <= horizon; ++n) {
    while (s < u.support.size() && u.support[s].index < n) ++s;
    if (s < u.support.size() && u.support[s].index == n) continue;
    ++u.off_count;
    if (auto c = space.exchange_class(n)) {
      auto [it, inserted] = slot.try_emplace(*c, u.classes.size());
      if (inserted) u.classes.emplace_back();
      u.classes[it->second].push_back(n);
    } else {
      u.singles.push_back(n);
    }
  }
  return u;
}

Index resolve_horizon(const SpaceSpec& space, const FiniteVector& x, std::size_t m, const FunctionalOptions& opt,
                      std::vector<std::string>& notes) {
  Index h = opt.horizon.value_or(default_horizon(x, m));
  if (h < x.max_index()) {
    fail(ErrorCode::invalid_argument, "candidate horizon " + std::to_string(h) + " is below max(supp x) = " +
                                          std::to_string(x.max_index()));
  }
  const Index limit = std::min(space.max_index(), x.ambient_dim());
  if (h > limit) {
    notes.push_back("horizon clamped from " + std::to_string(h) + " to " + std::to_string(limit));
    h = limit;
  }
  if (h > kMaxHorizonScan) fail(ErrorCode::invalid_argument, "candidate horizon above 10^7");
  return h;
}

double norm_of(const SpaceSpec& space, std::span<const Entry> es) { return eval_norm(space, es); }

/// Evaluates ||x - sum_A a_n e_n|| quickly for a fixed A.
class ResidualEvaluator {
 public:
  ResidualEvaluator(const SpaceSpec& space, std::span<const Entry> xs, std::span<const Index> set)
      : space_(space) {
    std::size_t i = 0, j = 0;
    while (i < xs.size() || j < set.size()) {
      if (j == set.size() || (i < xs.size() && xs[i].index < set[j])) {
        base_.push_back(xs[i++]);
      } else if (i == xs.size() || set[j] < xs[i].index) {
        slots_.push_back(base_.size());
        base_.push_back({set[j++], 0.0});
      } else {
        slots_.push_back(base_.size());
        base_.push_back(xs[i++]);
        ++j;
      }
    }
    x_on_set_.reserve(slots_.size());
    for (auto k : slots_) x_on_set_.push_back(base_[k].value);
    work_.reserve(base_.size());
  }

  double operator()(std::span<const double> a) {
    work_.clear();
    std::size_t j = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) {
      double v = base_[k].value;
      if (j < slots_.size() && slots_[j] == k) {
        v = x_on_set_[j] - a[j];
        ++j;
      }
      if (v != 0.0) work_.push_back({base_[k].index, v});
    }
    return norm_of(space_, work_);
  }

  std::span<const double> x_on_set() const { return x_on_set_; }

 private:
  const SpaceSpec& space_;
  std::vector<Entry> base_;
  std::vector<std::size_t> slots_;
  std::vector<double> x_on_set_;
  std::vector<Entry> work_;
};

struct InnerResult {
  double value;
  std::vector<double> coeffs;
};

/// Cyclic coordinate descent with golden-section line searches inside the box
/// |a_n - x_n| <= ||x||, followed by pairwise e_i +- e_j moves, from several starts.
InnerResult minimize_coefficients(const SpaceSpec& space, std::span<const Entry> xs, std::span<const Index> set,
                                  double x_norm, const FunctionalOptions& opt, std::uint64_t seed) {
  ResidualEvaluator eval(space, xs, set);
  const std::size_t r = set.size();
  const auto xa = eval.x_on_set();
  std::vector<double> proj(xa.begin(), xa.end());
  InnerResult best{eval(proj), proj};
  if (r == 0 || x_norm == 0.0) return best;
  const double radius = x_norm;

  std::vector<std::vector<double>> starts;
  starts.push_back(proj);
  starts.emplace_back(r, 0.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int k = 0; k < opt.restarts; ++k) {
    std::vector<double> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = xa[i] + radius * unit(rng);
    starts.push_back(std::move(s));
  }

  for (auto a : starts) {
    double val = eval(a);
    for (int sweep = 0; sweep < 200; ++sweep) {
      const double before = val;
      for (std::size_t i = 0; i < r; ++i) {
        const double keep = a[i];
        auto lm = golden_section(
            [&](double v) {
              a[i] = v;
              return eval(a);
            },
            xa[i] - radius, xa[i] + radius, opt.tolerance);
        if (lm.value < val) {
          a[i] = lm.argmin;
          val = lm.value;
        } else {
          a[i] = keep;
        }
      }
      for (std::size_t i = 0; i + 1 < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
          for (double sign : {1.0, -1.0}) {
            const double ai = a[i], aj = a[j];
            // keep both coordinates inside their boxes
            double lo = (xa[i] - radius) - ai, hi = (xa[i] + radius) - ai;
            const double lj = sign > 0 ? (xa[j] - radius) - aj : aj - (xa[j] + radius);
            const double hj = sign > 0 ? (xa[j] + radius) - aj : aj - (xa[j] - radius);
            lo = std::max(lo, lj);
            hi = std::min(hi, hj);
            if (!(lo < hi)) continue;
            auto lm = golden_section(
                [&](double s) {
                  a[i] = ai + s;
                  a[j] = aj + sign * s;
                  return eval(a);
                },
                lo, hi, opt.tolerance);
            if (lm.value < val) {
              a[i] = ai + lm.argmin;
              a[j] = aj + sign * lm.argmin;
              val = lm.value;
            } else {
              a[i] = ai;
              a[j] = aj;
            }
          }
        }
      }
      if (before - val <= opt.tolerance * std::max(1.0, val)) break;
    }
    if (val < best.value) best = {val, a};
  }
  return best;
}

/// Visits candidate sets; returns false from the visitor to stop.
using CandidateVisitor = std::function<void(std::span<const Index>)>;

std::uint64_t count_or_throw(std::uint64_t& counter, std::uint64_t cap) {
  if (++counter > cap) throw CapExceeded{};
  return counter;
}

/// Subsets S of the support of size in [lo, hi].
void support_subsets(const Universe& u, std::size_t lo, std::size_t hi,
                     const std::function<void(std::span<const std::size_t>)>& visit) {
  for (std::size_t j = lo; j <= hi; ++j) {
    for_each_combination(u.support.size(), j, [&](std::span<const std::size_t> idx) {
      visit(idx);
      return true;
    });
  }
}

/// Distributes `need` off-support picks over class pools (any count up to the
/// pool size, using the first members) and singles (0 or 1 each).
void off_support_picks(const Universe& u, std::size_t need, const std::function<void(const IndexSet&)>& visit) {
  struct Group {
    const Index* data;
    std::size_t size;
    bool pool;
  };
  std::vector<Group> groups;
  for (const auto& c : u.classes) groups.push_back({c.data(), c.size(), true});
  for (const auto& s : u.singles) groups.push_back({&s, 1, false});
  std::vector<std::size_t> suffix(groups.size() + 1, 0);
  for (std::size_t g = groups.size(); g-- > 0;) suffix[g] = suffix[g + 1] + groups[g].size;
  IndexSet picked;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t g, std::size_t left) {
    if (left == 0) {
      IndexSet sorted = picked;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
      return;
    }
    if (g == groups.size() || suffix[g] < left) return;
    const std::size_t most = std::min(left, groups[g].size);
    for (std::size_t take = 0; take <= most; ++take) {
      for (std::size_t k = 0; k < take; ++k) picked.push_back(groups[g].data[k]);
      rec(g + 1, left - take);
      picked.resize(picked.size() - take);
    }
  };
  rec(0, need);
}

IndexSet merge_sets(std::span<const Entry> support, std::span<const std::size_t> chosen, const IndexSet& off) {
  IndexSet out;
  out.reserve(chosen.size() + off.size());
  for (auto i : chosen) out.push_back(support[i].index);
  out.insert(out.end(), off.begin(), off.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Candidate sets A for sigma: every S in the support plus class-compressed padding, |A| = min(m, universe).
void sigma_candidates(const Universe& u, std::size_t m, const CandidateVisitor& visit) {
  const std::size_t k = u.support.size();
  const std::size_t size = std::min<std::size_t>(m, k + u.off_count);
  const std::size_t lo = size > u.off_count ? size - u.off_count : 0;
  support_subsets(u, lo, std::min(size, k), [&](std::span<const std::size_t> idx) {
    off_support_picks(u, size - idx.size(), [&](const IndexSet& off) { visit(merge_sets(u.support, idx, off)); });
  });
}

/// Candidate sets B for D_m^f: one representative per sequence of (support
/// point | exchange class) by rank, realized at the earliest positions.
void d_candidates(const Universe& u, std::size_t m, const CandidateVisitor& visit) {
  IndexSet cur;
  std::function<void(Index)> rec = [&](Index cursor) {
    if (cur.size() == m) {
      visit(cur);
      return;
    }
    std::vector<Index> next;
    for (const auto& e : u.support) {
      if (e.index > cursor) next.push_back(e.index);
    }
    for (const auto& c : u.classes) {
      auto it = std::upper_bound(c.begin(), c.end(), cursor);
      if (it != c.end()) next.push_back(*it);
    }
    for (auto it = std::upper_bound(u.singles.begin(), u.singles.end(), cursor); it != u.singles.end(); ++it) {
      next.push_back(*it);
    }
    std::sort(next.begin(), next.end());
    for (Index n : next) {
      cur.push_back(n);
      rec(n);
      cur.pop_back();
    }
  };
  rec(0);
}

/// Windows of the greedy ordering, padded with the first off-support indices.
void structured_candidates(const Universe& u, const FiniteVector& x, std::size_t m, const CandidateVisitor& visit) {
  const auto rho = greedy_ordering(x).ordered_indices;
  const std::size_t k = rho.size();
  const std::size_t size = std::min<std::size_t>(m, k + u.off_count);
  const std::size_t from_support = std::min(size, k);
  const IndexSet pad = u.first_off(size - from_support);
  const std::size_t windows = k >= from_support ? k - from_support + 1 : 1;
  for (std::size_t start = 0; start < windows; ++start) {
    IndexSet s(rho.begin() + static_cast<std::ptrdiff_t>(start),
               rho.begin() + static_cast<std::ptrdiff_t>(start + from_support));
    s.insert(s.end(), pad.begin(), pad.end());
    std::sort(s.begin(), s.end());
    visit(s);
  }
}

/// Runs `generate` exhaustively or structurally according to the options.
/// Returns true when the structured fallback was used.
bool drive(const SearchMode mode, std::uint64_t cap, const std::function<void(const CandidateVisitor&)>& exhaustive,
           const std::function<void(const CandidateVisitor&)>& structured, const CandidateVisitor& visit,
           std::uint64_t& candidates) {
  if (mode == SearchMode::structured) {
    structured([&](std::span<const Index> s) {
      ++candidates;
      visit(s);
    });
    return true;
  }
  std::uint64_t counted = 0;
  try {
    exhaustive([&](std::span<const Index>) { count_or_throw(counted, cap); });
  } catch (const CapExceeded&) {
    if (mode == SearchMode::exhaustive) {
      fail(ErrorCode::enumeration_cap,
           "more than " + std::to_string(cap) + " candidate sets; raise the cap, lower the horizon or use structured search");
    }
    structured([&](std::span<const Index> s) {
      ++candidates;
      visit(s);
    });
    return true;
  }
  exhaustive([&](std::span<const Index> s) {
    ++candidates;
    visit(s);
  });
  return false;
}

FunctionalResult zero_result(FunctionalKind kind, std::size_t m, Index horizon, const FunctionalOptions& opt) {
  FunctionalResult r;
  r.kind = kind;
  r.m = m;
  r.horizon = horizon;
  r.seed = opt.seed;
  r.tolerance = 0.0;
  return r;
}

std::vector<double> coefficients_on(std::span<const Entry> xs, std::span<const Index> set) {
  std::vector<double> out;
  out.reserve(set.size());
  std::size_t i = 0;
  for (Index n : set) {
    while (i < xs.size() && xs[i].index < n) ++i;
    out.push_back(i < xs.size() && xs[i].index == n ? xs[i].value : 0.0);
  }
  return out;
}

}  // namespace

std::string_view to_string(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::sigma: return "sigma";
    case FunctionalKind::sigma_tilde: return "sigma_tilde";
    case FunctionalKind::d_f: return "D_f";
  }
  return "unknown";
}

std::string_view to_string(OptimizerStatus status) {
  switch (status) {
    case OptimizerStatus::exact: return "exact";
    case OptimizerStatus::converged: return "converged";
    case OptimizerStatus::capped: return "capped";
  }
  return "unknown";
}

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::exhaustive: return "exhaustive";
    case SearchMode::structured: return "structured";
    case SearchMode::automatic: return "automatic";
  }
  return "unknown";
}

Index default_horizon(const FiniteVector& x, std::size_t m) { return x.max_index() + m + 4; }

double residual_norm(const SpaceSpec& space, const FiniteVector& x, std::span<const Index> set,
                     std::span<const double> coefficients) {
  if (set.size() != coefficients.size()) fail(ErrorCode::invalid_argument, "one coefficient per index is required");
  if (!is_sorted_set(set)) fail(ErrorCode::invalid_argument, "index sets must be strictly increasing");
  space.validate(x);
  return norm_of(space, residual(x.entries(), set, coefficients));
}

FunctionalResult sigma_tilde_m(const SpaceSpec& space, const FiniteVector& x, std::size_t m,
                               const FunctionalOptions& opt) {
  space.validate(x);
  FunctionalResult r = zero_result(FunctionalKind::sigma_tilde, m, 0, opt);
  r.horizon = resolve_horizon(space, x, m, opt, r.notes);
  const Universe u = build_universe(space, x, r.horizon);
  const std::size_t k = u.support.size();
  const std::size_t size = std::min<std::size_t>(m, k + u.off_count);
  if (size < m) r.notes.push_back("horizon holds fewer than m indices; using |A| = " + std::to_string(size));

  r.value = HUGE_VAL;
  auto consider = [&](std::span<const Index> set) {
    const double v = norm_of(space, residual(u.support, set, coefficients_on(u.support, set)));
    if (v < r.value) {
      r.value = v;
      r.witness_set.assign(set.begin(), set.end());
    }
  };
  // ||x - P_A x|| only depends on A within the support; any padding works.
  auto exhaustive = [&](const CandidateVisitor& visit) {
    const std::size_t lo = size > u.off_count ? size - u.off_count : 0;
    support_subsets(u, lo, std::min(size, k), [&](std::span<const std::size_t> idx) {
      visit(merge_sets(u.support, idx, u.first_off(size - idx.size())));
    });
  };
  auto structured = [&](const CandidateVisitor& visit) { structured_candidates(u, x, m, visit); };
  const bool capped = drive(opt.search, opt.cap, exhaustive, structured, consider, r.candidates);
  r.status = capped ? OptimizerStatus::capped : OptimizerStatus::exact;
  r.witness_coefficients = coefficients_on(u.support, r.witness_set);
  return r;
}

FunctionalResult sigma_m(const SpaceSpec& space, const FiniteVector& x, std::size_t m, const FunctionalOptions& opt) {
  space.validate(x);
  FunctionalResult r = zero_result(FunctionalKind::sigma, m, 0, opt);
  r.horizon = resolve_horizon(space, x, m, opt, r.notes);
  const Universe u = build_universe(space, x, r.horizon);
  const bool closed_form = space.is_lattice() && !opt.force_iterative;

  if (closed_form) {
    // Lattice norms: the best coefficients on A are x itself.
    FunctionalOptions inner = opt;
    auto t = sigma_tilde_m(space, x, m, inner);
    t.kind = FunctionalKind::sigma;
    t.notes.push_back("lattice norm: coefficients equal x on the chosen set");
    return t;
  }

  const double x_norm = norm_of(space, u.support);
  r.value = HUGE_VAL;
  r.tolerance = opt.tolerance;
  std::uint64_t index = 0;
  auto consider = [&](std::span<const Index> set) {
    // Lower bound: coordinates outside A survive untouched.
    double lb = 0.0;
    std::size_t j = 0;
    for (const auto& e : u.support) {
      while (j < set.size() && set[j] < e.index) ++j;
      if (!(j < set.size() && set[j] == e.index)) lb = std::max(lb, std::abs(e.value));
    }
    const std::uint64_t seed = opt.seed + index++;
    if (lb >= r.value) return;
    auto inner = minimize_coefficients(space, u.support, set, x_norm, opt, seed);
    if (inner.value < r.value) {
      r.value = inner.value;
      r.witness_set.assign(set.begin(), set.end());
      r.witness_coefficients = inner.coeffs;
    }
  };
  auto exhaustive = [&](const CandidateVisitor& visit) { sigma_candidates(u, m, visit); };
  auto structured = [&](const CandidateVisitor& visit) {
    structured_candidates(u, x, m, visit);
    // The best projection set is a strong candidate when it is cheap to find.
    FunctionalOptions t = opt;
    t.search = SearchMode::exhaustive;
    try {
      const auto best = sigma_tilde_m(space, x, m, t);
      visit(best.witness_set);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::enumeration_cap) throw;
    }
  };
  const bool capped = drive(opt.search, opt.cap, exhaustive, structured, consider, r.candidates);
  r.status = capped ? OptimizerStatus::capped : OptimizerStatus::converged;
  r.value = norm_of(space, residual(u.support, r.witness_set, r.witness_coefficients));
  return r;
}

FunctionalResult d_m_f(const SpaceSpec& space, const FiniteVector& x, std::size_t m, const WeightFunction* f,
                       const FunctionalOptions& opt) {
  if (m == 0) fail(ErrorCode::invalid_argument, "D_m needs m >= 1");
  if (f && f->domain_size() && *f->domain_size() < m) {
    fail(ErrorCode::invalid_argument, "weight function undefined at rank " + std::to_string(m));
  }
  space.validate(x);
  FunctionalResult r = zero_result(FunctionalKind::d_f, m, 0, opt);
  r.horizon = resolve_horizon(space, x, m, opt, r.notes);
  r.tolerance = opt.tolerance;
  const Universe u = build_universe(space, x, r.horizon);
  if (u.support.size() + u.off_count < m) {
    fail(ErrorCode::invalid_argument, "horizon holds fewer than m indices");
  }
  std::vector<double> weights(m);
  for (std::size_t j = 0; j < m; ++j) weights[j] = f ? (*f)(j + 1) : 1.0;

  const double x_norm = norm_of(space, u.support);
  r.value = x_norm;
  r.alpha = 0.0;
  bool degenerate = false;
  auto consider = [&](std::span<const Index> set) {
    if (r.witness_set.empty()) r.witness_set.assign(set.begin(), set.end());
    if (r.value == 0.0) return;
    double lb = 0.0;
    std::size_t j = 0;
    for (const auto& e : u.support) {
      while (j < set.size() && set[j] < e.index) ++j;
      if (!(j < set.size() && set[j] == e.index)) lb = std::max(lb, std::abs(e.value));
    }
    if (lb >= r.value) return;
    std::vector<Entry> w;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (weights[i] != 0.0) w.push_back({set[i], weights[i]});
    }
    const double w_norm = norm_of(space, w);
    if (w_norm == 0.0) {
      degenerate = true;
      return;  // contributes ||x|| at alpha = 0
    }
    const double bound = 2.0 * x_norm / w_norm;
    std::vector<double> c(set.size());
    auto phi = [&](double alpha) {
      for (std::size_t i = 0; i < set.size(); ++i) c[i] = alpha * weights[i];
      return norm_of(space, residual(u.support, set, c));
    };
    const auto lm = golden_section(phi, -bound, bound, opt.tolerance);
    if (lm.value < r.value) {
      r.value = lm.value;
      r.alpha = lm.argmin;
      r.witness_set.assign(set.begin(), set.end());
    }
  };
  auto exhaustive = [&](const CandidateVisitor& visit) { d_candidates(u, m, visit); };
  auto structured = [&](const CandidateVisitor& visit) { structured_candidates(u, x, m, visit); };
  const bool capped = drive(opt.search, opt.cap, exhaustive, structured, consider, r.candidates);
  r.status = capped ? OptimizerStatus::capped : OptimizerStatus::converged;
  if (degenerate) r.notes.push_back("some B had ||1_{f,B}|| = 0; those contribute ||x|| with alpha = 0");
  r.witness_coefficients.resize(r.witness_set.size());
  for (std::size_t i = 0; i < r.witness_set.size(); ++i) r.witness_coefficients[i] = *r.alpha * weights[i];
  r.value = norm_of(space, residual(u.support, r.witness_set, r.witness_coefficients));
  return r;
}

namespace {

/// Zooming grid over a box; returns the smallest value seen.
double zoom_grid(const std::function<double(std::span<const double>)>& fn, std::vector<double> lo,
                 std::vector<double> hi, double step) {
  const std::size_t dim = lo.size();
  double best = HUGE_VAL;
  std::vector<double> best_at(dim, 0.0);
  std::vector<double> point(dim);
  while (true) {
    std::vector<std::size_t> counts(dim);
    for (std::size_t d = 0; d < dim; ++d) counts[d] = static_cast<std::size_t>(std::floor((hi[d] - lo[d]) / step)) + 1;
    std::vector<std::size_t> it(dim, 0);
    while (true) {
      for (std::size_t d = 0; d < dim; ++d) point[d] = std::min(hi[d], lo[d] + step * static_cast<double>(it[d]));
      const double v = fn(point);
      if (v < best) {
        best = v;
        best_at = point;
      }
      std::size_t d = 0;
      while (d < dim && ++it[d] == counts[d]) it[d++] = 0;
      if (d == dim) break;
    }
    if (step < 1e-6) break;
    for (std::size_t d = 0; d < dim; ++d) {
      lo[d] = best_at[d] - step;
      hi[d] = best_at[d] + step;
    }
    step /= 10.0;
  }
  return best;
}

}  // namespace

double grid_oracle_sigma_m(const SpaceSpec& space, const FiniteVector& x, std::size_t m, Index horizon, double step) {
  if (m > 2) fail(ErrorCode::invalid_argument, "sigma grid oracle supports m <= 2");
  space.validate(x);
  const auto xs = x.entries();
  const double x_norm = norm_of(space, xs);
  if (m == 0) return x_norm;
  if (binomial_capped(horizon, m, kDefaultEnumerationCap) > kDefaultEnumerationCap) {
    fail(ErrorCode::enumeration_cap, "sigma grid oracle horizon too large");
  }
  double best = x_norm;
  IndexSet set(m);
  for_each_combination(horizon, m, [&](std::span<const std::size_t> idx) {
    for (std::size_t i = 0; i < m; ++i) set[i] = idx[i] + 1;
    const auto xa = coefficients_on(xs, set);
    std::vector<double> lo(m), hi(m);
    for (std::size_t i = 0; i < m; ++i) {
      lo[i] = xa[i] - x_norm;
      hi[i] = xa[i] + x_norm;
    }
    best = std::min(best, zoom_grid([&](std::span<const double> a) { return norm_of(space, residual(xs, set, a)); },
                                    lo, hi, step));
    return true;
  });
  return best;
}

double grid_oracle_d_m_f(const SpaceSpec& space, const FiniteVector& x, std::size_t m, const WeightFunction* f,
                         Index horizon, double step) {
  if (m == 0) fail(ErrorCode::invalid_argument, "D_m needs m >= 1");
  space.validate(x);
  if (binomial_capped(horizon, m, kDefaultEnumerationCap) > kDefaultEnumerationCap) {
    fail(ErrorCode::enumeration_cap, "D grid oracle horizon too large");
  }
  const auto xs = x.entries();
  const double x_norm = norm_of(space, xs);
  double best = x_norm;
  IndexSet set(m);
  std::vector<double> weights(m), c(m);
  for (std::size_t j = 0; j < m; ++j) weights[j] = f ? (*f)(j + 1) : 1.0;
  for_each_combination(horizon, m, [&](std::span<const std::size_t> idx) {
    for (std::size_t i = 0; i < m; ++i) set[i] = idx[i] + 1;
    std::vector<Entry> w;
    for (std::size_t i = 0; i < m; ++i) {
      if (weights[i] != 0.0) w.push_back({set[i], weights[i]});
    }
    const double w_norm = norm_of(space, w);
    if (w_norm == 0.0) return true;
    const double bound = 2.0 * x_norm / w_norm;
    best = std::min(best, zoom_grid(
                              [&](std::span<const double> a) {
                                for (std::size_t i = 0; i < m; ++i) c[i] = a[0] * weights[i];
                                return norm_of(space, residual(xs, set, c));
                              },
                              {-bound}, {bound}, step));
    return true;
  });
  return best;
}

}  // namespace greedylab
