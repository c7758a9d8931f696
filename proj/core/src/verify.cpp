#include "greedylab/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "greedylab/constants.hpp"
#include "greedylab/error.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/parallel.hpp"
#include "greedylab/samples.hpp"

namespace greedylab {

namespace {

using json = nlohmann::json;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

/// Worst ratio over a stream of (lhs, rhs) observations with the 0/0 policy:
/// both zero is skipped, positive over zero is unbounded.
struct Tracker {
  double worst = -std::numeric_limits<double>::infinity();
  json witness;
  bool unbounded = false;
  json unbounded_witness;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;

  void observe(double lhs, double rhs, const std::function<json()>& describe, double zero = 0.0) {
    if (rhs <= zero) {
      if (lhs <= zero) {
        ++skipped;
        return;
      }
      ++evaluated;
      if (!unbounded) {
        unbounded = true;
        unbounded_witness = describe();
        unbounded_witness["lhs"] = lhs;
        unbounded_witness["rhs"] = rhs;
      }
      return;
    }
    ++evaluated;
    const double r = lhs / rhs;
    if (r > worst) {
      worst = r;
      witness = describe();
      witness["lhs"] = lhs;
      witness["rhs"] = rhs;
    }
  }

  /// Folds another tracker in; earlier trackers win ties so merges follow sample order.
  void merge(const Tracker& other) {
    evaluated += other.evaluated;
    skipped += other.skipped;
    if (other.unbounded && !unbounded) {
      unbounded = true;
      unbounded_witness = other.unbounded_witness;
    }
    if (other.worst > worst) {
      worst = other.worst;
      witness = other.witness;
    }
  }
};

/// Asserted against `bound` when given, reported as info otherwise.
SuiteCheck ratio_check(std::string id, const Tracker& t, std::optional<double> bound, double tolerance,
                       std::string detail = {}) {
  SuiteCheck c;
  c.statement_id = std::move(id);
  c.bound = bound;
  c.tolerance = tolerance;
  c.evaluated = t.evaluated;
  c.skipped = t.skipped;
  c.detail = std::move(detail);
  if (t.evaluated == 0) {
    c.status = CheckStatus::skipped;
    if (c.detail.empty()) c.detail = "no evaluable configuration";
    return c;
  }
  if (t.unbounded) {
    c.worst_ratio = std::numeric_limits<double>::infinity();
    c.witness = t.unbounded_witness;
    c.status = bound ? CheckStatus::fail : CheckStatus::info;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += "unbounded: positive left side over a vanishing right side";
    return c;
  }
  c.worst_ratio = t.worst;
  c.witness = t.witness;
  if (!bound) {
    c.status = CheckStatus::info;
  } else {
    c.status = t.worst <= *bound + tolerance ? CheckStatus::pass : CheckStatus::fail;
  }
  return c;
}

SuiteCheck value_check(std::string id, bool ok, std::string detail, json witness = json::object()) {
  SuiteCheck c;
  c.statement_id = std::move(id);
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  c.detail = std::move(detail);
  c.witness = std::move(witness);
  c.evaluated = 1;
  return c;
}

/// Runs fn on every sample in parallel and merges the per-sample trackers in order.
template <std::size_t K>
std::array<Tracker, K> over_samples(std::span<const FiniteVector> samples,
                                    const std::function<void(std::size_t, std::array<Tracker, K>&)>& fn) {
  std::vector<std::array<Tracker, K>> per(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) { fn(i, per[i]); });
  std::array<Tracker, K> out;
  for (const auto& arr : per) {
    for (std::size_t k = 0; k < K; ++k) out[k].merge(arr[k]);
  }
  return out;
}

IndexSet subset_of(std::span<const Index> base, std::uint64_t mask) {
  IndexSet s;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (mask >> i & 1) s.push_back(base[i]);
  }
  return s;
}

std::vector<Entry> signed_entries(std::span<const Index> set, std::span<const int> signs) {
  std::vector<Entry> e;
  e.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) e.push_back({set[i], static_cast<double>(signs[i])});
  return e;
}

json signs_json(std::span<const int> signs) { return json(std::vector<int>(signs.begin(), signs.end())); }

double norm_of(const SpaceSpec& space, std::span<const Index> set, const WeightFunction* f = nullptr) {
  std::vector<Entry> e;
  e.reserve(set.size());
  for (std::size_t j = 0; j < set.size(); ++j) {
    const double v = f ? (*f)(j + 1) : 1.0;
    if (v != 0.0) e.push_back({set[j], v});
  }
  return eval_norm(space, e);
}

IndexSet range_set(Index first, Index last) {
  IndexSet s;
  for (Index n = first; n <= last; ++n) s.push_back(n);
  return s;
}

json scope_with(const json& sample_scope, std::size_t count) {
  json s = sample_scope.is_object() ? sample_scope : json::object();
  s["sample_count"] = count;
  return s;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::info: return "info";
  }
  return "unknown";
}

SuiteCheck& SuiteReport::add(SuiteCheck check) {
  if (check.status == CheckStatus::fail) overall = false;
  checks.push_back(std::move(check));
  return checks.back();
}

const SuiteCheck* SuiteReport::find(std::string_view statement_id) const {
  for (const auto& c : checks) {
    if (c.statement_id == statement_id) return &c;
  }
  return nullptr;
}

json vector_json(const FiniteVector& x) {
  json entries = json::array();
  for (const auto& e : x.entries()) entries.push_back(json::array({e.index, e.value}));
  json out{{"entries", entries}};
  if (x.ambient_dim() != kUnboundedDim) out["ambient_dim"] = x.ambient_dim();
  return out;
}

json set_json(std::span<const Index> set) { return json(std::vector<Index>(set.begin(), set.end())); }

// ---------------------------------------------------------------------------

SuiteReport suite_greedy_inequality(const SpaceSpec& space, std::span<const FiniteVector> samples,
                                    const GreedyInequalityOptions& options, const json& sample_scope) {
  if (options.m_max == 0) fail(ErrorCode::invalid_argument, "m_max must be positive");
  if (options.order_rule == OrderRule::ceil_lambda_m && !(options.lambda >= 1.0)) {
    fail(ErrorCode::invalid_argument, "lambda must be at least 1");
  }
  for (const auto& x : samples) space.validate(x);

  SuiteReport rep;
  rep.suite_id = "suite_greedy_inequality";
  rep.space = space.describe();
  rep.scope = scope_with(sample_scope, samples.size());
  rep.scope["m_max"] = options.m_max;
  rep.scope["functional"] = std::string(to_string(options.functional));
  rep.scope["order_rule"] = options.order_rule == OrderRule::m ? "m" : "ceil_lambda_m";
  if (options.order_rule == OrderRule::ceil_lambda_m) rep.scope["lambda"] = options.lambda;
  if (options.functional == FunctionalKind::d_f) rep.scope["f"] = options.f ? options.f->describe() : "constant:1";
  rep.scope["search"] = std::string(to_string(options.functional_options.search));

  const std::size_t M = options.m_max;
  struct PerSample {
    std::vector<Tracker> by_m;
    std::uint64_t capped = 0;
  };
  std::vector<PerSample> per(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    const FiniteVector& x = samples[i];
    const double xn = eval_norm(space, x);
    PerSample& ps = per[i];
    ps.by_m.resize(M);
    for (std::size_t m = 1; m <= M; ++m) {
      const std::size_t order = options.order_rule == OrderRule::m
                                    ? m
                                    : static_cast<std::size_t>(std::ceil(options.lambda * static_cast<double>(m) - 1e-12));
      const double lhs = eval_norm(space, x - greedy_sum(x, order));
      FunctionalResult fr;
      switch (options.functional) {
        case FunctionalKind::sigma: fr = sigma_m(space, x, m, options.functional_options); break;
        case FunctionalKind::sigma_tilde: fr = sigma_tilde_m(space, x, m, options.functional_options); break;
        case FunctionalKind::d_f: fr = d_m_f(space, x, m, options.f, options.functional_options); break;
      }
      if (fr.status == OptimizerStatus::capped) ++ps.capped;
      // Optimizer residue below this level is treated as an exact zero.
      const double zero = 1e-12 * std::max(xn, 1.0);
      ps.by_m[m - 1].observe(
          lhs, fr.value,
          [&] {
            return json{{"sample", i},
                        {"m", m},
                        {"order", order},
                        {"x", vector_json(x)},
                        {"functional_set", set_json(fr.witness_set)},
                        {"functional_coefficients", fr.witness_coefficients}};
          },
          zero);
    }
  });

  std::vector<Tracker> by_m(M);
  Tracker all;
  std::uint64_t capped = 0;
  for (const auto& ps : per) {
    capped += ps.capped;
    for (std::size_t k = 0; k < M; ++k) by_m[k].merge(ps.by_m[k]);
  }
  json curve = json::array();
  for (std::size_t k = 0; k < M; ++k) {
    all.merge(by_m[k]);
    curve.push_back(by_m[k].evaluated == 0 ? json(nullptr)
                    : by_m[k].unbounded     ? json("inf")
                                            : json(by_m[k].worst));
    rep.add(ratio_check("fitted_constant_m" + std::to_string(k + 1), by_m[k], options.bound, options.tolerance));
  }
  rep.scope["fitted_curve"] = curve;
  rep.add(ratio_check("fitted_constant", all, options.bound, options.tolerance,
                      "max over samples and m of ||x - G(x)|| / functional"));

  if (options.functional == FunctionalKind::d_f) {
    rep.notes.push_back("1_{f,B} enumerates B in increasing order: sum_j alpha f(j) e_{n_j} with n_1 < n_2 < ...");
    if (space.is_lattice() && !samples.empty()) {
      // An f-greedy basis is suppression unconditional with the same constant.
      auto ksu = suppression_unconditional_estimate(space, samples);
      SuiteCheck c;
      c.statement_id = "suppression_bound_from_fitted_constant";
      c.status = CheckStatus::info;
      c.worst_ratio = ksu.estimate;
      if (!all.unbounded && all.evaluated) c.bound = std::max(all.worst, 1.0);
      c.detail = "suppression estimate on the same samples against the fitted constant";
      c.evaluated = ksu.configurations;
      rep.add(std::move(c));
    }
  }
  if (capped) {
    rep.notes.push_back(std::to_string(capped) +
                        " functional values came from the structured search; they are upper bounds, so the "
                        "corresponding ratios understate the fitted constant");
  }
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport suite_coefficient_bounds(const SpaceSpec& space, double cq, std::span<const FiniteVector> samples,
                                     const json& sample_scope) {
  if (!(cq >= 1.0)) fail(ErrorCode::invalid_argument, "C_q must be at least 1");
  for (const auto& x : samples) space.validate(x);
  constexpr std::size_t kMaxSet = 12;
  constexpr std::size_t kMaxSigned = 8;

  SuiteReport rep;
  rep.suite_id = "suite_coefficient_bounds";
  rep.space = space.describe();
  rep.scope = scope_with(sample_scope, samples.size());
  rep.scope["cq"] = cq;
  rep.scope["max_set"] = kMaxSet;
  rep.scope["max_signed_set"] = kMaxSigned;

  auto res = over_samples<3>(samples, [&](std::size_t i, std::array<Tracker, 3>& tr) {
    const FiniteVector& x = samples[i];
    const IndexSet B = x.support();
    if (B.empty() || B.size() > kMaxSet) {
      ++tr[0].skipped;
      ++tr[1].skipped;
      ++tr[2].skipped;
      return;
    }
    const std::uint64_t full = (std::uint64_t{1} << B.size()) - 1;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      const IndexSet A = subset_of(B, mask);
      const FiniteVector pa = project(x, A);
      double hi = 0.0, lo = std::numeric_limits<double>::infinity();
      std::vector<int> eps;
      for (const auto& e : pa.entries()) {
        hi = std::max(hi, std::abs(e.value));
        lo = std::min(lo, std::abs(e.value));
        eps.push_back(e.value < 0 ? -1 : 1);
      }
      const double pan = eval_norm(space, pa);
      auto wit = [&] { return json{{"sample", i}, {"A", set_json(A)}, {"x", vector_json(x)}}; };
      tr[0].observe(pan, hi * norm_of(space, A), wit);
      tr[1].observe(lo * eval_norm(space, signed_entries(A, eps)), pan, wit);
    }
    if (B.size() > kMaxSigned) {
      ++tr[2].skipped;
      return;
    }
    // Smallest signed indicator over B, then the largest over subsets of B.
    const std::size_t k = B.size();
    double min_b = std::numeric_limits<double>::infinity();
    std::vector<int> eta_best;
    std::vector<int> eta(k);
    for (std::uint64_t s = 0; s <= full; ++s) {
      for (std::size_t j = 0; j < k; ++j) eta[j] = (s >> j & 1) ? -1 : 1;
      const double v = eval_norm(space, signed_entries(B, eta));
      if (v < min_b) {
        min_b = v;
        eta_best = eta;
      }
    }
    std::uint64_t patterns = 1;
    for (std::size_t j = 0; j < k; ++j) patterns *= 3;
    IndexSet A;
    std::vector<int> eps;
    for (std::uint64_t code = 1; code < patterns; ++code) {
      A.clear();
      eps.clear();
      std::uint64_t c = code;
      for (std::size_t j = 0; j < k; ++j, c /= 3) {
        if (c % 3 == 0) continue;
        A.push_back(B[j]);
        eps.push_back(c % 3 == 1 ? 1 : -1);
      }
      tr[2].observe(eval_norm(space, signed_entries(A, eps)), min_b, [&] {
        return json{{"sample", i},     {"A", set_json(A)},        {"eps", signs_json(eps)},
                    {"B", set_json(B)}, {"eta", signs_json(eta_best)}};
      });
    }
  });

  const double bound = 2.0 * cq;
  rep.add(ratio_check("coefficient_upper_bound", res[0], bound, 1e-12,
                      "||sum_A a_n e_n|| / (max|a_n| ||1_A||) over A within supp x"));
  rep.add(ratio_check("coefficient_lower_bound", res[1], bound, 1e-12,
                      "min|a_n| ||1_{eps A}|| / ||sum_A a_n e_n|| with eps = sign(a)"));
  rep.add(ratio_check("signed_indicator_comparison", res[2], bound, 1e-12,
                      "||1_{eps A}|| / ||1_{eta B}|| over A within B = supp x and all sign patterns"));
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport suite_projection_comparison(const SpaceSpec& space, double cq, std::span<const FiniteVector> samples,
                                        double t, const json& sample_scope) {
  if (!(cq >= 1.0)) fail(ErrorCode::invalid_argument, "C_q must be at least 1");
  if (!(t > 0.0 && t <= 1.0)) fail(ErrorCode::invalid_argument, "t must lie in (0, 1]");
  for (const auto& x : samples) space.validate(x);
  constexpr std::size_t kAllPairs = 8;
  constexpr std::size_t kMaxSet = 12;

  SuiteReport rep;
  rep.suite_id = "suite_projection_comparison";
  rep.space = space.describe();
  rep.scope = scope_with(sample_scope, samples.size());
  rep.scope["cq"] = cq;
  rep.scope["t"] = t;
  rep.notes.push_back("each sample is scaled to max |x_n| = 1; A2 ranges over subsets of {n : |x_n| >= t}");

  auto res = over_samples<1>(samples, [&](std::size_t i, std::array<Tracker, 1>& tr) {
    const FiniteVector y = samples[i].scaled(1.0 / samples[i].max_abs());
    IndexSet T;
    for (const auto& e : y.entries()) {
      if (std::abs(e.value) >= t) T.push_back(e.index);
    }
    if (T.size() > kMaxSet) {
      ++tr[0].skipped;
      return;
    }
    auto observe = [&](const IndexSet& a1, const IndexSet& a2, double a2n) {
      tr[0].observe(eval_norm(space, project(y, a1)), a2n, [&] {
        return json{{"sample", i}, {"A1", set_json(a1)}, {"A2", set_json(a2)}, {"x", vector_json(y)}};
      });
    };
    const std::uint64_t full = (std::uint64_t{1} << T.size()) - 1;
    if (T.size() <= kAllPairs) {
      for (std::uint64_t m2 = 1; m2 <= full; ++m2) {
        const IndexSet a2 = subset_of(T, m2);
        const double a2n = eval_norm(space, project(y, a2));
        for (std::uint64_t m1 = m2;; m1 = (m1 - 1) & m2) {
          observe(subset_of(T, m1), a2, a2n);
          if (m1 == 0) break;
        }
      }
    } else {
      const double a2n = eval_norm(space, project(y, T));
      for (std::uint64_t m1 = 0; m1 <= full; ++m1) observe(subset_of(T, m1), T, a2n);
    }
  });

  rep.add(ratio_check("projection_comparison", res[0], 8.0 * cq * cq * cq / t, 1e-12,
                      "||P_{A1} x|| / ||P_{A2} x|| for A1 within A2, t <= |x_n| <= 1 on A2"));
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport suite_disjoint_democracy(const SpaceSpec& space, std::size_t max_size, Index horizon) {
  if (max_size == 0 || max_size > horizon) fail(ErrorCode::invalid_argument, "need 1 <= max_size <= horizon");
  const Index disjoint_horizon = horizon + max_size;
  if (space.max_index() < disjoint_horizon) {
    fail(ErrorCode::invalid_argument, "space has fewer than " + std::to_string(disjoint_horizon) + " coordinates");
  }
  SuiteReport rep;
  rep.suite_id = "suite_disjoint_democracy";
  rep.space = space.describe();
  rep.scope = {{"max_size", max_size}, {"horizon", horizon}, {"disjoint_horizon", disjoint_horizon}};
  rep.notes.push_back(
      "disjoint pairs range over [1, horizon + max_size] so that every pair inside [1, horizon] has a set of "
      "the same size beyond both");

  DemocracyOptions full;
  full.max_size = max_size;
  full.horizon = horizon;
  full.family = DemocracyFamily::all_pairs;
  DemocracyOptions disj = full;
  disj.horizon = disjoint_horizon;
  disj.family = DemocracyFamily::disjoint_only;
  const ConstantsReport cf = democracy_constant(space, full);
  const ConstantsReport cd = democracy_constant(space, disj);

  SuiteCheck c;
  c.statement_id = "full_below_disjoint_squared";
  c.worst_ratio = cf.estimate;
  c.bound = cd.estimate * cd.estimate;
  c.tolerance = 1e-9;
  c.status = cf.estimate <= *c.bound + c.tolerance ? CheckStatus::pass : CheckStatus::fail;
  c.evaluated = cf.configurations + cd.configurations;
  c.detail = "C_full = " + fmt(cf.estimate) + ", C_disj = " + fmt(cd.estimate);
  c.witness = {{"full", {{"A", set_json(cf.witness.set_a)}, {"B", set_json(cf.witness.set_b)}}},
               {"disjoint", {{"A", set_json(cd.witness.set_a)}, {"B", set_json(cd.witness.set_b)}}}};
  rep.add(std::move(c));
  rep.scope["c_full"] = cf.estimate;
  rep.scope["c_disjoint"] = cd.estimate;
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport suite_democracy_counterexamples(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite_id = "suite_democracy_counterexamples";
  rep.space = "several";
  rep.scope = {{"seed", seed}};
  std::mt19937_64 rng(seed);
  auto random_set = [&](Index lo, Index hi, std::size_t size) {
    std::vector<Index> pool = range_set(lo, hi);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(size);
    return make_index_set(std::move(pool));
  };
  auto size_in = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  // Tail-sum blocks: indicators have norm |A|, alternating indicators do not.
  {
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t k = 1; k <= 12; ++k) sizes.push_back(k);
    const SpaceSpec X = SpaceSpec::alternating_tail_l1_sum(sizes);
    const Index total = *X.layout()->total();
    bool ok = true;
    json wit = json::object();
    for (int trial = 0; trial < 200 && ok; ++trial) {
      const IndexSet A = random_set(1, total, size_in(1, 8));
      const double v = norm_of(X, A);
      if (v != static_cast<double>(A.size())) {
        ok = false;
        wit = {{"A", set_json(A)}, {"norm", v}};
      }
    }
    auto c = value_check("tail_sum_indicator_norm_equals_size", ok, "200 random sets of size at most 8", wit);
    c.evaluated = 200;
    rep.add(std::move(c));

    const WeightFunction f = WeightFunction::alternating();
    const Index last_start = *X.layout()->start(12);
    bool ratio_ok = true;
    json curve = json::array();
    for (std::size_t m = 1; m <= 8; ++m) {
      IndexSet A;
      for (std::size_t k = 1; k <= m; ++k) A.push_back(*X.layout()->start(k));
      const IndexSet B = random_set(last_start, last_start + 11, m);
      const double r = norm_of(X, A, &f) / norm_of(X, B, &f);
      curve.push_back(r);
      if (r != static_cast<double>(m)) ratio_ok = false;
    }
    auto c2 = value_check("tail_sum_f_ratio_equals_m", ratio_ok,
                          "A = first index of blocks 1..m, B inside one block, f(n) = (-1)^n; both indicators "
                          "read as f-weighted",
                          {{"ratios", curve}});
    c2.evaluated = 8;
    c2.worst_ratio = curve.back().get<double>();
    rep.add(std::move(c2));
  }

  // Signed subsequence space.
  {
    const SpaceSpec X = SpaceSpec::signed_subsequence();
    bool ok = true;
    for (Index m = 1; m <= 20; ++m) ok = ok && norm_of(X, range_set(1, m)) == 1.0;
    auto c = value_check("signed_subsequence_interval_norm_one", ok, "||1_{1..m}|| = 1 for m <= 20");
    c.evaluated = 20;
    rep.add(std::move(c));

    bool growth = true;
    bool equals_m = true;
    json values = json::array();
    for (Index m = 1; m <= 20; ++m) {
      IndexSet B;
      for (Index j = 0; j < m; ++j) B.push_back(2 * j + 1);
      const double v = norm_of(X, B);
      values.push_back(v);
      growth = growth && v >= static_cast<double>(m) - 1.0;
      equals_m = equals_m && v == static_cast<double>(m);
    }
    auto c2 = value_check("signed_subsequence_odd_indices_growth", growth,
                          std::string("||1_B|| >= m - 1 for B = {1, 3, ..., 2m - 1}, m <= 20; exact value ") +
                              (equals_m ? "equals m for every m" : "differs from m somewhere"),
                          {{"norms", values}});
    c2.evaluated = 20;
    rep.add(std::move(c2));

    const WeightFunction f = WeightFunction::alternating();
    DemocracyOptions o;
    o.f = &f;
    o.max_size = 6;
    o.horizon = 12;
    const auto d = democracy_constant(X, o);
    SuiteCheck c3;
    c3.statement_id = "signed_subsequence_f_democratic";
    c3.worst_ratio = d.estimate;
    c3.bound = 1.0;
    c3.tolerance = 1e-12;
    c3.status = d.estimate <= 1.0 + 1e-12 ? CheckStatus::pass : CheckStatus::fail;
    c3.evaluated = d.configurations;
    c3.detail = "f-democracy constant with f(n) = (-1)^n over all pairs in [1, 12]";
    rep.add(std::move(c3));
  }

  // Schreier space.
  {
    const SpaceSpec S = SpaceSpec::schreier();
    DemocracyOptions o;
    o.family = DemocracyFamily::structured;
    o.max_size = 64;
    const auto d = democracy_constant(S, o);
    SuiteCheck c;
    c.statement_id = "schreier_two_democratic";
    c.worst_ratio = d.estimate;
    c.bound = 2.0;
    c.tolerance = 1e-12;
    c.status = d.estimate <= 2.0 + 1e-12 ? CheckStatus::pass : CheckStatus::fail;
    c.evaluated = d.configurations;
    c.detail = "structured democracy ratio over sizes 1..64";
    c.witness = {{"A", set_json(d.witness.set_a)}, {"B", set_json(d.witness.set_b)}};
    rep.add(std::move(c));

    const WeightFunction f = WeightFunction::reciprocal();
    const std::size_t m = 256;
    const IndexSet low = range_set(1, m);
    const IndexSet high = range_set(m + 1, 2 * m);
    const double hi = norm_of(S, high, &f);
    const double lo = norm_of(S, low, &f);
    SuiteCheck c2;
    c2.statement_id = "schreier_not_f_democratic";
    c2.worst_ratio = hi / lo;
    c2.bound = 3.0;
    c2.status = hi / lo >= 3.0 ? CheckStatus::pass : CheckStatus::fail;
    c2.evaluated = 1;
    c2.detail = "||1_{f,{m+1..2m}}|| / ||1_{f,{1..m}}|| at m = 256 with f(n) = 1/n must reach 3";
    c2.witness = {{"m", m}, {"numerator", hi}, {"denominator", lo}};
    rep.add(std::move(c2));

    bool ok = true;
    json wit = json::object();
    for (std::size_t k = 1; k <= 64 && ok; ++k) {
      const double v = norm_of(S, range_set(k + 1, 2 * k), &f);
      if (std::abs(v - harmonic_number(k)) > 1e-12 * harmonic_number(k)) {
        ok = false;
        wit = {{"m", k}, {"norm", v}};
      }
    }
    auto c3 = value_check("schreier_shifted_interval_f_norm", ok, "||1_{f,{m+1..2m}}|| = s_m for m <= 64", wit);
    c3.evaluated = 64;
    rep.add(std::move(c3));

    // With a regular f the two democracy constants control each other.
    const WeightFunction g = WeightFunction::alternating();
    DemocracyOptions of = o;
    of.f = &g;
    const auto dg = democracy_constant(S, of);
    SuiteCheck c4;
    c4.statement_id = "regular_weight_democracy_transfer";
    c4.worst_ratio = std::max(d.estimate / dg.estimate, dg.estimate / d.estimate);
    c4.bound = 8.0;
    c4.tolerance = 1e-12;
    c4.status = *c4.worst_ratio <= 8.0 + 1e-12 ? CheckStatus::pass : CheckStatus::fail;
    c4.evaluated = d.configurations + dg.configurations;
    c4.detail = "C_d = " + fmt(d.estimate) + ", C_{d,f} = " + fmt(dg.estimate) +
                " with f(n) = (-1)^n, C_q = 1, c1 = c2 = 1; each is at most 8 times the other";
    rep.add(std::move(c4));
  }

  // Weighted mixed space.
  {
    const SpaceSpec X = SpaceSpec::weighted_mixed();
    const WeightFunction f = WeightFunction::power(0.5);
    bool ok = true;
    double worst = 0.0;
    json wit = json::object();
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t m = size_in(1, 50);
      const IndexSet A = random_set(1, 200, m);
      const double v = norm_of(X, A, &f);
      const double err = std::abs(v - std::sqrt(harmonic_number(m)));
      if (err > worst) {
        worst = err;
        wit = {{"A", set_json(A)}, {"norm", v}};
      }
      ok = ok && err <= 1e-9;
    }
    auto c = value_check("weighted_mixed_f_indicator_norm", ok,
                         "||1_{f,A}|| = sqrt(s_m) for 100 random sets, m <= 50, f(n) = n^{-1/2}", wit);
    c.worst_ratio = worst;
    c.tolerance = 1e-9;
    c.evaluated = 100;
    rep.add(std::move(c));

    bool evens = true;
    for (Index m = 1; m <= 50; ++m) {
      IndexSet A;
      for (Index j = 1; j <= m; ++j) A.push_back(2 * j);
      evens = evens && std::abs(norm_of(X, A) - std::sqrt(static_cast<double>(m))) <= 1e-12 * std::sqrt(m);
    }
    auto c2 = value_check("weighted_mixed_even_indicator_norm", evens, "||1_{2,4,...,2m}|| = sqrt(m) for m <= 50");
    c2.evaluated = 50;
    rep.add(std::move(c2));

    json ratios = json::array();
    double prev = 0.0;
    bool increasing = true;
    double last = 0.0;
    for (Index m : {Index{100}, Index{1000}, Index{10000}}) {
      IndexSet A, B;
      for (Index j = 1; j <= m; ++j) {
        A.push_back(2 * j);
        B.push_back(2 * j - 1);
      }
      last = norm_of(X, A) / norm_of(X, B);
      ratios.push_back(json{{"m", m}, {"ratio", last}});
      increasing = increasing && last > prev;
      prev = last;
    }
    SuiteCheck c3;
    c3.statement_id = "weighted_mixed_democracy_growth";
    c3.worst_ratio = last;
    c3.bound = 1.4;
    c3.status = increasing && last >= 1.4 ? CheckStatus::pass : CheckStatus::fail;
    c3.evaluated = 3;
    c3.detail = "||1_evens|| / ||1_odds|| strictly increasing over m = 100, 1000, 10000 and at least 1.4 at 10000";
    c3.witness = {{"ratios", ratios}};
    rep.add(std::move(c3));
  }
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport suite_sparse_block(const SpaceSpec& space, const WeightFunction& f,
                               const SparseBlockSuiteOptions& options) {
  if (space.kind() != SpaceKind::sparse_block) fail(ErrorCode::invalid_argument, "a sparse block space is required");
  if (!space.sparse_meta().certified) {
    fail(ErrorCode::not_certified, "the greedy bound check needs a certified sparse block space");
  }
  const BlockLayout& layout = *space.layout();
  if (layout.num_blocks() < 2) fail(ErrorCode::invalid_argument, "the sparse block suite needs two blocks");
  const Index n1 = *layout.size(1).exact;
  const double scale1 = space.scales()[0];

  SuiteReport rep;
  rep.suite_id = "suite_sparse_block";
  rep.space = space.describe();
  rep.scope = {{"f", f.describe()},
               {"sample_count", options.sample_count},
               {"max_support", options.max_support},
               {"m_max", options.m_max},
               {"seed", options.seed},
               {"block1_size", n1}};

  // Indicator norms inside block 1 follow max{1, scale_1 m}.
  {
    double worst = 0.0;
    json wit = json::object();
    for (Index m = 1; m <= n1; ++m) {
      const double v = norm_of(space, range_set(1, m));
      const double expect = std::max(1.0, scale1 * static_cast<double>(m));
      const double err = std::abs(v - expect);
      if (err > worst) {
        worst = err;
        wit = {{"m", m}, {"norm", v}, {"expected", expect}};
      }
    }
    auto c = value_check("block_indicator_norm", worst <= 1e-12, "||1_{1..m}|| = max{1, scale_1 m} for m <= N_1", wit);
    c.worst_ratio = worst;
    c.tolerance = 1e-12;
    c.evaluated = n1;
    rep.add(std::move(c));
  }
  // Full block against an equally large set in block 2.
  {
    const Index start2 = *layout.start(2);
    const double a = norm_of(space, range_set(1, n1));
    const double b = norm_of(space, range_set(start2, start2 + n1 - 1));
    const double g_prev = scale1 * static_cast<double>(n1);  // log g(N_0)
    auto c = value_check("block_democracy_ratio", std::abs(a / b - g_prev) <= 1e-12 * g_prev,
                         "||1_{M_1}|| / ||1_B|| with B in block 2, |B| = N_1, equals log g(N_0)",
                         {{"numerator", a}, {"denominator", b}, {"log_g_n0", g_prev}});
    c.worst_ratio = a / b;
    rep.add(std::move(c));
  }

  SampleOptions so;
  so.count = options.sample_count;
  so.first_index = 1;
  so.last_index = n1;
  so.max_support = std::min<std::size_t>(options.max_support, n1);
  so.ambient_dim = n1 + 4;
  so.seed = options.seed;
  const auto samples = make_samples(so);
  rep.scope["samples"] = so.describe();
  rep.scope["candidate_horizon"] = n1 + 4;

  GreedyInequalityOptions go;
  go.m_max = options.m_max;
  go.functional = FunctionalKind::d_f;
  go.f = &f;
  go.bound = 2.0;
  go.tolerance = options.tolerance;
  go.functional_options.horizon = n1 + 4;
  go.functional_options.search = SearchMode::exhaustive;
  SuiteReport g = suite_greedy_inequality(space, samples, go, rep.scope);
  for (auto& c : g.checks) {
    if (c.statement_id == "fitted_constant") c.statement_id = "greedy_bound_two_d_f";
    if (c.statement_id == "suppression_bound_from_fitted_constant") continue;
    rep.add(std::move(c));
  }
  for (auto& n : g.notes) rep.notes.push_back(std::move(n));
  rep.notes.push_back("candidate sets range over block 1 and the first 4 indices of block 2");
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport suite_abt_quasi_greedy(const SpaceSpec& space, double cq, std::span<const FiniteVector> samples,
                                   std::span<const std::uint64_t> a_set, std::span<const std::uint64_t> b_set,
                                   double t, const json& sample_scope) {
  if (a_set.empty() || b_set.empty()) fail(ErrorCode::invalid_argument, "A and B must be nonempty");
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::invalid_argument, "t must lie in [0, 1]");
  if (!(cq >= 1.0)) fail(ErrorCode::invalid_argument, "C_q must be at least 1");
  for (auto a : a_set) {
    if (a == 0) fail(ErrorCode::invalid_argument, "elements of A must be positive");
  }
  for (auto b : b_set) {
    if (b == 0) fail(ErrorCode::invalid_argument, "elements of B must be positive");
  }
  for (const auto& x : samples) space.validate(x);
  const std::uint64_t max_a = *std::max_element(a_set.begin(), a_set.end());
  const std::uint64_t max_b = *std::max_element(b_set.begin(), b_set.end());

  SuiteReport rep;
  rep.suite_id = "suite_abt_quasi_greedy";
  rep.space = space.describe();
  rep.scope = scope_with(sample_scope, samples.size());
  rep.scope["A"] = std::vector<std::uint64_t>(a_set.begin(), a_set.end());
  rep.scope["B"] = std::vector<std::uint64_t>(b_set.begin(), b_set.end());
  rep.scope["t"] = t;
  rep.scope["cq"] = cq;

  if (!samples.empty()) {
    const auto est = abt_quasi_greedy_estimate(space, samples, a_set, b_set, t);
    SuiteCheck c;
    c.statement_id = "projection_bounded";
    c.worst_ratio = est.estimate;
    c.evaluated = est.configurations;
    c.tolerance = 1e-12;
    if (est.witness.vector) {
      c.witness = {{"x", vector_json(*est.witness.vector)}, {"set", set_json(est.witness.set_a)}};
    }
    if (space.is_lattice()) {
      c.bound = 1.0;
      c.status = est.estimate <= 1.0 + 1e-12 ? CheckStatus::pass : CheckStatus::fail;
      c.detail = "lattice norm: every coordinate projection has norm at most 1";
    } else {
      c.status = CheckStatus::info;
      c.detail = "no certified bound for this space; the estimate is reported only";
    }
    rep.add(std::move(c));

    // Forward bound with the empirical t-quasi-greedy constant in place of C(t).
    Index horizon = 1;
    for (const auto& x : samples) horizon = std::max(horizon, x.max_index());
    const auto ct = t_quasi_greedy_estimate(space, samples, t);
    const auto kk = coordinate_product(space, horizon, samples);
    const double qhat = static_cast<double>(max_a - 1) * kk.estimate +
                        ct.estimate * (1.0 + static_cast<double>(max_a + max_b - 2) * kk.estimate);
    SuiteCheck q;
    q.statement_id = "forward_bound_empirical";
    q.status = CheckStatus::info;
    q.worst_ratio = est.estimate;
    q.bound = qhat;
    q.evaluated = est.configurations;
    q.detail = "bound (max A - 1) k + C(t) (1 + (max A + max B - 2) k) with C(t) = " + fmt(ct.estimate) +
               " and k = " + fmt(kk.estimate) + " both empirical; " +
               (est.estimate <= qhat + 1e-12 ? "estimate within the bound" : "estimate exceeds the bound");
    rep.add(std::move(q));
  }

  // Large orders recover finitely supported vectors.
  {
    SuiteCheck c;
    c.statement_id = "large_order_recovers_x";
    c.tolerance = 0.0;
    if (t == 0.0) {
      c.status = CheckStatus::skipped;
      c.detail = "with t = 0 every set qualifies, so recovery is not expected";
    } else {
      std::vector<std::uint64_t> visited(samples.size(), 0), skipped(samples.size(), 0);
      std::vector<json> bad(samples.size());
      parallel_for(samples.size(), [&](std::size_t i) {
        const FiniteVector& x = samples[i];
        const std::size_t first = x.support_size() + max_a;
        if (x.ambient_dim() == kUnboundedDim || x.ambient_dim() < first) {
          ++skipped[i];
          return;
        }
        const std::size_t last = std::min<std::size_t>(x.ambient_dim(), first + 3);
        for (std::size_t m = first; m <= last && bad[i].is_null(); ++m) {
          for (auto a : a_set) {
            for_each_abt_weak_greedy_set(x, m, a, 1, t, [&](std::span<const Index> g) {
              ++visited[i];
              if (bad[i].is_null() && !(project(x, g) == x)) {
                bad[i] = {{"sample", i}, {"m", m}, {"a", a}, {"set", set_json(g)}, {"x", vector_json(x)}};
              }
            });
          }
        }
      });
      c.status = CheckStatus::pass;
      for (std::size_t i = 0; i < samples.size(); ++i) {
        c.evaluated += visited[i];
        c.skipped += skipped[i];
        if (!bad[i].is_null() && c.status == CheckStatus::pass) {
          c.status = CheckStatus::fail;
          c.witness = bad[i];
        }
      }
      c.detail = "every (a, 1, t)-weak greedy set of order |supp x| + max A .. + 3 projects x onto itself";
      if (c.evaluated == 0 && c.status == CheckStatus::pass) c.status = CheckStatus::skipped;
    }
    rep.add(std::move(c));
  }

  // x = e_1 with b = 2: the sets {2, ..., m + 1} qualify and discard x.
  {
    const Index ambient = max_a + 6;
    if (space.max_index() < ambient) fail(ErrorCode::invalid_argument, "space too small for the e_1 selection");
    const FiniteVector e1 = FiniteVector::unit(1, ambient);
    bool ok = true;
    json wit = json::object();
    std::uint64_t total = 0, vanishing = 0, avoiding = 0, avoiding_vanishing = 0;
    for (std::size_t m = max_a + 1; m <= max_a + 5; ++m) {
      const IndexSet gamma = range_set(2, m + 1);
      for (auto a : a_set) {
        if (a > m) continue;
        if (ok && !(is_abt_weak_greedy(e1, gamma, a, 2, t) && project(e1, gamma).is_zero())) {
          ok = false;
          wit = {{"m", m}, {"a", a}, {"set", set_json(gamma)}};
        }
        for_each_abt_weak_greedy_set(e1, m, a, 2, t, [&](std::span<const Index> g) {
          ++total;
          const bool zero = project(e1, g).is_zero();
          vanishing += zero;
          if (g.front() != 1) {
            ++avoiding;
            avoiding_vanishing += zero;
          }
        });
      }
    }
    auto c = value_check("shifted_selection_discards_e1", ok,
                         "{2, ..., m + 1} is (a, 2, t)-weak greedy for x = e_1 and projects it to 0, "
                         "m in (max A, max A + 5]",
                         wit);
    c.evaluated = 5 * a_set.size();
    rep.add(std::move(c));

    auto c2 = value_check("selections_avoiding_index_one_vanish", avoiding == avoiding_vanishing && avoiding > 0,
                          std::to_string(avoiding_vanishing) + " of " + std::to_string(avoiding) +
                              " enumerated sets without index 1 project e_1 to 0");
    c2.evaluated = avoiding;
    rep.add(std::move(c2));

    SuiteCheck c3;
    c3.statement_id = "all_selections_vanish";
    c3.status = CheckStatus::info;
    c3.evaluated = total;
    c3.worst_ratio = total ? static_cast<double>(total - vanishing) / static_cast<double>(total) : 0.0;
    c3.detail = std::to_string(vanishing) + " of " + std::to_string(total) +
                " enumerated (a, 2, t)-weak greedy sets project e_1 to 0; the others contain index 1, "
                "which b = 2 never excludes";
    c3.witness = {{"ambient_dim", ambient}, {"total", total}, {"vanishing", vanishing}};
    rep.add(std::move(c3));
  }
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport suite_weak_quasi_greedy(const SpaceSpec& space, std::span<const FiniteVector> samples, double t,
                                    const json& sample_scope) {
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::invalid_argument, "t must lie in [0, 1]");
  for (const auto& x : samples) space.validate(x);
  SuiteReport rep;
  rep.suite_id = "suite_weak_quasi_greedy";
  rep.space = space.describe();
  rep.scope = scope_with(sample_scope, samples.size());
  rep.scope["t"] = t;
  if (samples.empty()) {
    rep.notes.push_back("no samples");
    return rep;
  }

  const auto weak = t_quasi_greedy_estimate(space, samples, t);
  {
    SuiteCheck c;
    c.statement_id = "weak_projection_bounded";
    c.worst_ratio = weak.estimate;
    c.evaluated = weak.configurations;
    c.tolerance = 1e-12;
    if (weak.witness.vector) {
      c.witness = {{"x", vector_json(*weak.witness.vector)}, {"set", set_json(weak.witness.set_a)}};
    }
    if (space.is_lattice()) {
      c.bound = 1.0;
      c.status = weak.estimate <= 1.0 + 1e-12 ? CheckStatus::pass : CheckStatus::fail;
      c.detail = "lattice norm: every coordinate projection has norm at most 1";
    } else {
      c.status = CheckStatus::info;
      c.detail = "t-quasi-greedy estimate; no certified bound for this space";
    }
    rep.add(std::move(c));
  }
  {
    const auto zero = t_quasi_greedy_estimate(space, samples, 0.0);
    const auto sup = suppression_unconditional_estimate(space, samples);
    SuiteCheck c;
    c.statement_id = "zero_weak_matches_suppression";
    c.worst_ratio = std::abs(zero.estimate - sup.estimate);
    c.bound = 0.0;
    c.tolerance = 1e-12;
    c.status = *c.worst_ratio <= 1e-12 ? CheckStatus::pass : CheckStatus::fail;
    c.evaluated = zero.configurations + sup.configurations;
    c.detail = "every set is 0-weak greedy: t = 0 estimate " + fmt(zero.estimate) + ", suppression estimate " +
               fmt(sup.estimate);
    rep.add(std::move(c));
  }
  {
    const auto greedy = quasi_greedy_estimate(space, samples);
    SuiteCheck c;
    c.statement_id = "greedy_below_weak";
    c.worst_ratio = greedy.estimate;
    c.bound = weak.estimate;
    c.tolerance = 1e-12;
    c.status = greedy.estimate <= weak.estimate + 1e-12 ? CheckStatus::pass : CheckStatus::fail;
    c.evaluated = greedy.configurations;
    c.detail = "greedy sets are t-weak greedy, so the quasi-greedy estimate cannot exceed the t-weak one";
    rep.add(std::move(c));
  }
  {
    std::vector<FiniteVector> distinct;
    for (const auto& x : samples) {
      std::vector<double> mags;
      for (const auto& e : x.entries()) mags.push_back(std::abs(e.value));
      std::sort(mags.begin(), mags.end());
      if (std::adjacent_find(mags.begin(), mags.end()) == mags.end()) distinct.push_back(x);
    }
    bool same = true;
    json wit = json::object();
    std::uint64_t compared = 0;
    for (std::size_t i = 0; i < distinct.size() && same; ++i) {
      for (std::size_t m = 1; m <= distinct[i].support_size(); ++m) {
        ++compared;
        if (enumerate_weak_greedy_sets(distinct[i], m, 1.0) != enumerate_greedy_sets(distinct[i], m)) {
          same = false;
          wit = {{"x", vector_json(distinct[i])}, {"m", m}};
          break;
        }
      }
    }
    double r1 = 0.0, rg = 0.0;
    if (!distinct.empty()) {
      r1 = t_quasi_greedy_estimate(space, distinct, 1.0).estimate;
      rg = quasi_greedy_estimate(space, distinct).estimate;
      same = same && r1 == rg;
    }
    auto c = value_check("unit_weak_matches_greedy", same,
                         "with distinct magnitudes the 1-weak greedy sets are the greedy sets and the estimates agree",
                         wit);
    c.evaluated = compared;
    c.skipped = samples.size() - distinct.size();
    if (distinct.empty()) c.status = CheckStatus::skipped;
    rep.add(std::move(c));
  }
  return rep;
}

}  // namespace greedylab
