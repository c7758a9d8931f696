#include "greedylab/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "greedylab/combinatorics.hpp"
#include "greedylab/error.hpp"

namespace greedylab {

namespace {

void check_set(const FiniteVector& x, std::span<const Index> set) {
  if (!is_sorted_set(set)) fail(ErrorCode::invalid_argument, "index sets must be strictly increasing");
  if (!set.empty() && (set.front() == 0 || set.back() > x.ambient_dim())) {
    fail(ErrorCode::out_of_layout, "index set leaves [1, " + std::to_string(x.ambient_dim()) + "]");
  }
}

void check_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::invalid_argument, "weakness parameter t must lie in [0, 1]");
}

Index zero_count(const FiniteVector& x) { return x.ambient_dim() - x.support_size(); }

/// Calls fn(j) for the j-th smallest index of [1, ambient] outside supp(x), j = 0, 1, ...
class ZeroIndices {
 public:
  explicit ZeroIndices(const FiniteVector& x) : x_(x) {}

  IndexSet first(std::size_t count) const {
    IndexSet out;
    out.reserve(count);
    auto entries = x_.entries();
    std::size_t e = 0;
    for (Index n = 1; out.size() < count && n <= x_.ambient_dim(); ++n) {
      while (e < entries.size() && entries[e].index < n) ++e;
      if (e < entries.size() && entries[e].index == n) continue;
      out.push_back(n);
    }
    return out;
  }

 private:
  const FiniteVector& x_;
};

}  // namespace

std::string_view to_string(SelectionKind kind) {
  switch (kind) {
    case SelectionKind::natural: return "natural";
    case SelectionKind::greedy: return "greedy";
    case SelectionKind::t_weak: return "t_weak";
    case SelectionKind::abt_weak: return "abt_weak";
  }
  return "unknown";
}

IndexSet GreedySelection::as_set() const {
  IndexSet s = ordered_indices;
  std::sort(s.begin(), s.end());
  return s;
}

GreedySelection greedy_ordering(const FiniteVector& x) {
  std::vector<Entry> es(x.entries().begin(), x.entries().end());
  std::stable_sort(es.begin(), es.end(),
                   [](const Entry& p, const Entry& q) { return std::abs(p.value) > std::abs(q.value); });
  GreedySelection g;
  for (const auto& e : es) {
    g.ordered_indices.push_back(e.index);
    g.values.push_back(std::abs(e.value));
  }
  g.order = es.size();
  return g;
}

IndexSet natural_greedy_set(const FiniteVector& x, std::size_t m) {
  auto g = greedy_ordering(x);
  if (m < g.ordered_indices.size()) g.ordered_indices.resize(m);
  return g.as_set();
}

FiniteVector greedy_sum(const FiniteVector& x, std::size_t m) { return project(x, natural_greedy_set(x, m)); }

bool is_weak_greedy_set(const FiniteVector& x, std::span<const Index> set, double t) {
  check_t(t);
  check_set(x, set);
  double inside_min = HUGE_VAL;
  for (Index n : set) inside_min = std::min(inside_min, std::abs(x[n]));
  double outside_max = 0.0;
  std::size_t j = 0;
  for (const auto& e : x.entries()) {
    while (j < set.size() && set[j] < e.index) ++j;
    if (j < set.size() && set[j] == e.index) continue;
    outside_max = std::max(outside_max, std::abs(e.value));
  }
  if (set.empty()) return true;
  return inside_min >= t * outside_max;
}

bool is_greedy_set(const FiniteVector& x, std::span<const Index> set) { return is_weak_greedy_set(x, set, 1.0); }

bool is_abt_weak_greedy(const FiniteVector& x, std::span<const Index> set, std::uint64_t a, std::uint64_t b,
                        double t) {
  check_t(t);
  check_set(x, set);
  if (a == 0 || b == 0) fail(ErrorCode::invalid_argument, "a and b must be at least 1");
  if (set.size() < a) {
    fail(ErrorCode::invalid_argument,
         "order m = " + std::to_string(set.size()) + " is below a = " + std::to_string(a));
  }
  std::vector<double> inside;
  inside.reserve(set.size());
  for (Index n : set) inside.push_back(std::abs(x[n]));
  std::nth_element(inside.begin(), inside.begin() + static_cast<std::ptrdiff_t>(a - 1), inside.end());
  const double a_th = inside[a - 1];

  std::vector<double> outside;
  std::size_t j = 0;
  for (const auto& e : x.entries()) {
    while (j < set.size() && set[j] < e.index) ++j;
    if (j < set.size() && set[j] == e.index) continue;
    outside.push_back(std::abs(e.value));
  }
  double b_th = 0.0;
  if (outside.size() >= b) {
    std::nth_element(outside.begin(), outside.begin() + static_cast<std::ptrdiff_t>(b - 1), outside.end(),
                     std::greater<>());
    b_th = outside[b - 1];
  }
  return a_th >= t * b_th;
}

void for_each_weak_greedy_set(const FiniteVector& x, std::size_t m, double t, const SetVisitor& visit,
                              std::uint64_t cap) {
  check_t(t);
  if (m > x.ambient_dim()) fail(ErrorCode::invalid_argument, "order m exceeds the ambient dimension");
  if (m == 0) {
    visit({});
    return;
  }
  // Group indices by magnitude level; zeros in the ambient range form level 0.
  std::map<double, IndexSet, std::greater<>> levels;
  for (const auto& e : x.entries()) levels[std::abs(e.value)].push_back(e.index);
  const Index zeros = zero_count(x);

  struct Plan {
    double mu;
    IndexSet forced, level, pool;
    std::size_t need;
  };
  std::vector<Plan> plans;
  std::uint64_t total = 0;

  auto consider = [&](double mu, const IndexSet& level) {
    Plan p{mu, {}, level, {}, 0};
    for (const auto& [v, idx] : levels) {
      if (v == mu) continue;
      if (t * v > mu) {
        if (v < mu) return;  // cannot happen for t <= 1
        p.forced.insert(p.forced.end(), idx.begin(), idx.end());
      } else if (v > mu) {
        p.pool.insert(p.pool.end(), idx.begin(), idx.end());
      }
    }
    if (p.forced.size() >= m) return;
    p.need = m - p.forced.size();
    const std::uint64_t all = binomial_capped(p.level.size() + p.pool.size(), p.need, cap);
    const std::uint64_t without = binomial_capped(p.pool.size(), p.need, cap);
    if (all > cap) fail(ErrorCode::enumeration_cap, "more than " + std::to_string(cap) + " weak greedy sets");
    const std::uint64_t count = all - without;
    if (count == 0) return;
    total += count;
    if (total > cap) fail(ErrorCode::enumeration_cap, "more than " + std::to_string(cap) + " weak greedy sets");
    std::sort(p.forced.begin(), p.forced.end());
    std::sort(p.pool.begin(), p.pool.end());
    plans.push_back(std::move(p));
  };

  for (const auto& [mu, idx] : levels) consider(mu, idx);
  if (zeros > 0) {
    // Level 0 needs every index outside to satisfy t|x_i| <= 0.
    std::size_t forced = 0;
    std::size_t pool = 0;
    for (const auto& [v, idx] : levels) (t * v > 0.0 ? forced : pool) += idx.size();
    if (forced < m && m <= forced + pool + zeros) {
      if (zeros > 10'000'000) {
        fail(ErrorCode::enumeration_cap, "sets containing zero coordinates need a finite ambient dimension");
      }
      consider(0.0, ZeroIndices(x).first(zeros));
    }
  }

  std::vector<Index> out;
  for (const auto& p : plans) {
    for (std::size_t j = 1; j <= std::min(p.need, p.level.size()); ++j) {
      const std::size_t rest = p.need - j;
      if (rest > p.pool.size()) continue;
      for_each_combination(p.level.size(), j, [&](std::span<const std::size_t> li) {
        for_each_combination(p.pool.size(), rest, [&](std::span<const std::size_t> pi) {
          out.assign(p.forced.begin(), p.forced.end());
          for (auto i : li) out.push_back(p.level[i]);
          for (auto i : pi) out.push_back(p.pool[i]);
          std::sort(out.begin(), out.end());
          visit(out);
          return true;
        });
        return true;
      });
    }
  }
}

void for_each_abt_weak_greedy_set(const FiniteVector& x, std::size_t m, std::uint64_t a, std::uint64_t b, double t,
                                  const SetVisitor& visit, std::uint64_t cap) {
  check_t(t);
  if (a == 0 || b == 0) fail(ErrorCode::invalid_argument, "a and b must be at least 1");
  if (m < a) fail(ErrorCode::invalid_argument, "order m = " + std::to_string(m) + " is below a = " + std::to_string(a));
  const Index n = x.ambient_dim();
  if (m > n) fail(ErrorCode::invalid_argument, "order m exceeds the ambient dimension");
  if (binomial_capped(n, m, cap) > cap) {
    fail(ErrorCode::enumeration_cap, "C(" + std::to_string(n) + ", " + std::to_string(m) + ") exceeds the cap of " +
                                         std::to_string(cap) + " candidate sets");
  }
  IndexSet set(m);
  for_each_combination(static_cast<std::size_t>(n), m, [&](std::span<const std::size_t> idx) {
    for (std::size_t i = 0; i < m; ++i) set[i] = idx[i] + 1;
    if (is_abt_weak_greedy(x, set, a, b, t)) visit(set);
    return true;
  });
}

namespace {
std::vector<IndexSet> collect(const std::function<void(const SetVisitor&)>& run) {
  std::vector<IndexSet> out;
  run([&](std::span<const Index> s) { out.emplace_back(s.begin(), s.end()); });
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

std::vector<IndexSet> enumerate_greedy_sets(const FiniteVector& x, std::size_t m, std::uint64_t cap) {
  return enumerate_weak_greedy_sets(x, m, 1.0, cap);
}

std::vector<IndexSet> enumerate_weak_greedy_sets(const FiniteVector& x, std::size_t m, double t, std::uint64_t cap) {
  return collect([&](const SetVisitor& v) { for_each_weak_greedy_set(x, m, t, v, cap); });
}

std::vector<IndexSet> enumerate_abt_weak_greedy_sets(const FiniteVector& x, std::size_t m, std::uint64_t a,
                                                     std::uint64_t b, double t, std::uint64_t cap) {
  return collect([&](const SetVisitor& v) { for_each_abt_weak_greedy_set(x, m, a, b, t, v, cap); });
}

FiniteVector project(const FiniteVector& x, std::span<const Index> set) {
  check_set(x, set);
  std::vector<Entry> out;
  std::size_t j = 0;
  for (const auto& e : x.entries()) {
    while (j < set.size() && set[j] < e.index) ++j;
    if (j < set.size() && set[j] == e.index) out.push_back(e);
  }
  return FiniteVector(std::move(out), x.ambient_dim());
}

FiniteVector project_complement(const FiniteVector& x, std::span<const Index> set) {
  check_set(x, set);
  std::vector<Entry> out;
  std::size_t j = 0;
  for (const auto& e : x.entries()) {
    while (j < set.size() && set[j] < e.index) ++j;
    if (!(j < set.size() && set[j] == e.index)) out.push_back(e);
  }
  return FiniteVector(std::move(out), x.ambient_dim());
}

FiniteVector partial_sum(const FiniteVector& x, Index n) {
  std::vector<Entry> out;
  for (const auto& e : x.entries()) {
    if (e.index > n) break;
    out.push_back(e);
  }
  return FiniteVector(std::move(out), x.ambient_dim());
}

FiniteVector indicator(std::span<const Index> set, std::optional<std::span<const int>> signs, const WeightFunction* f,
                       Index ambient_dim) {
  if (!is_sorted_set(set)) fail(ErrorCode::invalid_argument, "index sets must be strictly increasing");
  if (signs && signs->size() != set.size()) fail(ErrorCode::invalid_argument, "one sign per index is required");
  std::vector<Entry> out;
  out.reserve(set.size());
  for (std::size_t j = 0; j < set.size(); ++j) {
    double v = f ? (*f)(j + 1) : 1.0;
    if (signs) {
      const int s = (*signs)[j];
      if (s != 1 && s != -1) fail(ErrorCode::invalid_argument, "signs must be +1 or -1");
      v *= s;
    }
    out.push_back({set[j], v});
  }
  return FiniteVector(std::move(out), ambient_dim);
}

}  // namespace greedylab
