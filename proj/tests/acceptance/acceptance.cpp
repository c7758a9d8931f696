// Acceptance criteria runner: one PASS/FAIL line per criterion, nonzero exit
// status if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "greedylab/constants.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/samples.hpp"
#include "greedylab/space.hpp"
#include "greedylab/sparse_block.hpp"
#include "greedylab/verify.hpp"
#include "oracles.hpp"

using namespace greedylab;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [violated: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) {
    o.ok = false;
    o.detail << " [runtime " << secs << " s over the " << limit_seconds << " s limit]";
  }
  if (!o.ok) ++failures;
  std::printf("AC%-2d %s  %s (%.2f s)%s\n", id, o.ok ? "PASS" : "FAIL", title, secs, o.detail.str().c_str());
  std::fflush(stdout);
}

std::vector<FiniteVector> samples(std::size_t count, Index last, std::size_t max_support, std::uint64_t seed,
                                  std::size_t min_support = 1) {
  SampleOptions o;
  o.count = count;
  o.last_index = last;
  o.min_support = min_support;
  o.max_support = max_support;
  o.seed = seed;
  return make_samples(o);
}

bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

double indicator_norm(const SpaceSpec& s, const IndexSet& set, const WeightFunction* f = nullptr) {
  return eval_norm(s, indicator(set, std::nullopt, f));
}

IndexSet range_set(Index a, Index b) {
  IndexSet s;
  for (Index n = a; n <= b; ++n) s.push_back(n);
  return s;
}

IndexSet odds(Index m) {
  IndexSet s;
  for (Index j = 0; j < m; ++j) s.push_back(2 * j + 1);
  return s;
}

const SuiteCheck& check_of(const SuiteReport& r, const char* id) {
  const auto* c = r.find(id);
  if (!c) throw std::runtime_error(std::string("missing check ") + id);
  return *c;
}

}  // namespace

int main() {
  criterion(1, "norm evaluators match brute-force oracles", 120, [](Outcome& o) {
    std::size_t bad = 0;
    for (const auto& x : samples(500, 20, 20, 101)) {
      bad += !close(eval_norm(SpaceSpec::schreier(), x), oracle::schreier(x, 20));
    }
    o.require(bad == 0, std::to_string(bad) + " Schreier mismatches");
    std::size_t bad2 = 0;
    for (const auto& x : samples(500, 14, 14, 102)) {
      bad2 += !close(eval_norm(SpaceSpec::signed_subsequence(), x), oracle::signed_subsequence(x, 14));
    }
    o.require(bad2 == 0, std::to_string(bad2) + " signed subsequence mismatches");
    std::size_t bad3 = 0;
    for (const auto& x : samples(200, 40, 8, 103)) {
      bad3 += !close(eval_norm(SpaceSpec::weighted_mixed(), x), oracle::weighted_mixed(x));
    }
    o.require(bad3 == 0, std::to_string(bad3) + " weighted mixed mismatches");
    o.detail << " Schreier 500/500, signed subsequence 500/500, weighted mixed 200/200";
  });

  criterion(2, "Schreier basis is 2-democratic but not f-democratic for f(n) = 1/n", 30, [](Outcome& o) {
    const auto S = SpaceSpec::schreier();
    DemocracyOptions d;
    d.family = DemocracyFamily::structured;
    d.max_size = 64;
    const auto r = democracy_constant(S, d);
    o.require(r.estimate <= 2.0 + 1e-12, "structured democracy ratio above 2");
    const auto f = WeightFunction::reciprocal();
    const double ratio = indicator_norm(S, range_set(257, 512), &f) / indicator_norm(S, range_set(1, 256), &f);
    o.require(ratio >= 3.0, "f-democracy ratio below 3 at m = 256");
    o.detail << " democracy ratio " << r.estimate << " (m <= 64), f-ratio at m = 256 " << ratio;
  });

  criterion(3, "tail-sum blocks: democratic, not f-democratic for f(n) = (-1)^n", 10, [](Outcome& o) {
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t k = 1; k <= 12; ++k) sizes.push_back(k);
    const auto X = SpaceSpec::alternating_tail_l1_sum(sizes);
    const Index total = *X.layout()->total();
    std::mt19937_64 rng(7);
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) {
      std::vector<Index> pool = range_set(1, total);
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(std::uniform_int_distribution<std::size_t>(1, 8)(rng));
      const IndexSet A = make_index_set(pool);
      bad += indicator_norm(X, A) != static_cast<double>(A.size());
    }
    o.require(bad == 0, std::to_string(bad) + " sets with ||1_A|| != |A|");
    const auto f = WeightFunction::alternating();
    const Index b0 = *X.layout()->start(12);
    for (std::size_t m = 1; m <= 8; ++m) {
      IndexSet A;
      for (std::size_t k = 1; k <= m; ++k) A.push_back(*X.layout()->start(k));
      const double r = indicator_norm(X, A, &f) / indicator_norm(X, range_set(b0, b0 + m - 1), &f);
      o.require(r == static_cast<double>(m), "f-ratio != m at m = " + std::to_string(m));
    }
    o.detail << " 200 random sets exact, f-weighted ratio = m for m = 1..8";
  });

  criterion(4, "signed subsequence space: intervals have norm 1, odd indices grow", 10, [](Outcome& o) {
    const auto X = SpaceSpec::signed_subsequence();
    bool exact_m = true;
    for (Index m = 1; m <= 20; ++m) {
      o.require(indicator_norm(X, range_set(1, m)) == 1.0, "||1_{1..m}|| != 1 at m = " + std::to_string(m));
      const double b = indicator_norm(X, odds(m));
      o.require(b >= static_cast<double>(m) - 1.0, "||1_B|| < m - 1 at m = " + std::to_string(m));
      exact_m = exact_m && b == static_cast<double>(m);
    }
    o.detail << " ||1_B|| for B = {1, 3, ..., 2m - 1} " << (exact_m ? "equals m exactly" : "differs from m")
             << " for m <= 20";
  });

  criterion(5, "weighted mixed space: f-democratic, not democratic", 60, [](Outcome& o) {
    const auto X = SpaceSpec::weighted_mixed();
    const auto f = WeightFunction::power(0.5);
    std::mt19937_64 rng(11);
    std::size_t bad = 0;
    for (int i = 0; i < 100; ++i) {
      const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
      std::vector<Index> pool = range_set(1, 300);
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(m);
      bad += std::abs(indicator_norm(X, make_index_set(pool), &f) - std::sqrt(harmonic_number(m))) > 1e-9;
    }
    o.require(bad == 0, std::to_string(bad) + " sets off sqrt(s_m)");
    double prev = 0.0, last = 0.0;
    for (Index m : {Index{100}, Index{1000}, Index{10000}}) {
      IndexSet evens;
      for (Index j = 1; j <= m; ++j) evens.push_back(2 * j);
      last = indicator_norm(X, evens) / indicator_norm(X, odds(m));
      o.require(last > prev, "ratio not increasing at m = " + std::to_string(m));
      o.detail << " ratio(" << m << ") = " << last;
      prev = last;
    }
    o.require(last >= 1.4, "ratio below 1.4 at m = 10^4");
  });

  criterion(6, "sparse block construction and the 2 D_m^f bound", 300, [](Outcome& o) {
    const auto f = WeightFunction::geometric(0.5);
    const auto g = WeightFunction::power(-1).scaled(0.5);
    const auto X = build_sparse_block_space(f, g, 2, SparseBlockMode::certified_mode());
    o.require(X.sparse_meta().n0 == 6.0, "N_0 != 6");
    o.require(X.layout()->size(1).exact == std::uint64_t{192}, "N_1 != 192");
    o.require(check_sparseness(WeightFunction::constant(0), WeightFunction::power(-1), 10, 40).passed, "(a) fails");
    o.require(check_sparseness(f, g, 10, 40).passed, "(b) fails");
    o.require(check_sparseness(WeightFunction::geometric(3), WeightFunction::power(-1).scaled(2.0 / 3.0), 10, 40)
                  .passed,
              "(c) fails");
    o.require(!check_sparseness(WeightFunction::constant(1), g, 10, 40).passed, "(d) regular f passes");
    o.require(!check_sparseness(WeightFunction::power(2), g, 10, 40).passed, "(e) n^-2 passes");
    SparseBlockSuiteOptions so;
    so.sample_count = 500;
    so.max_support = 10;
    so.m_max = 4;
    so.seed = 2024;
    const auto r = suite_sparse_block(X, f, so);
    const auto& c = check_of(r, "greedy_bound_two_d_f");
    o.require(c.status == CheckStatus::pass, "||x - G_m x|| > 2 D_m^f(x) for some sample");
    o.require(check_of(r, "block_indicator_norm").status == CheckStatus::pass, "block indicator norms");
    o.require(check_of(r, "block_democracy_ratio").status == CheckStatus::pass, "block democracy ratio");
    o.detail << " N_0 = 6, N_1 = 192, worst ||x - G_m x|| / D_m^f = " << c.worst_ratio.value_or(0.0) << " over "
             << c.evaluated << " pairs (" << c.skipped << " 0/0 skipped)";
  });

  criterion(7, "coefficient bounds 2 C_q and projection comparison 8 C_q^3 / t", 120, [](Outcome& o) {
    const std::vector<SpaceSpec> spaces{SpaceSpec::lp(1), SpaceSpec::lp(1.5), SpaceSpec::lp(2), SpaceSpec::lp(4),
                                        SpaceSpec::schreier()};
    double worst_gu = 0.0, worst_l1 = 0.0;
    std::uint64_t seed = 700;
    for (const auto& s : spaces) {
      const auto xs = samples(1000, 16, 8, ++seed);
      const auto gu = suite_coefficient_bounds(s, 1.0, xs);
      o.require(gu.overall, "coefficient bounds on " + s.describe());
      for (const auto& c : gu.checks) worst_gu = std::max(worst_gu, c.worst_ratio.value_or(0.0));
      for (double t : {0.25, 0.5, 1.0}) {
        const auto l1 = suite_projection_comparison(s, 1.0, xs, t);
        o.require(l1.overall, "projection comparison on " + s.describe());
        worst_l1 = std::max(worst_l1, l1.checks.front().worst_ratio.value_or(0.0) * t / 8.0);
      }
    }
    o.detail << " worst ratio " << worst_gu << " against 2, worst normalized projection ratio " << worst_l1
             << " against 1";
  });

  criterion(8, "full democracy at most disjoint democracy squared", 60, [](Outcome& o) {
    const auto f = WeightFunction::geometric(0.5);
    const auto g = WeightFunction::power(-1).scaled(0.5);
    const std::vector<SpaceSpec> spaces{
        SpaceSpec::lp(1),
        SpaceSpec::lp(2),
        SpaceSpec::c0_sup(),
        SpaceSpec::schreier(),
        SpaceSpec::alternating_tail_l1_sum({1, 2, 3, 4, 5, 6}),
        SpaceSpec::signed_subsequence(),
        SpaceSpec::weighted_mixed(),
        build_sparse_block_space(f, g, 2, SparseBlockMode::certified_mode()),
        SpaceSpec::generic_block_sum(BlockSumMode::l1, {5, 7, 9},
                                     {SpaceSpec::schreier(), SpaceSpec::signed_subsequence(), SpaceSpec::lp(3)})};
    for (const auto& s : spaces) {
      const auto r = suite_disjoint_democracy(s, 8, 12);
      o.require(r.overall, s.describe());
      o.detail << " " << to_string(s.kind()) << ":" << r.scope["c_full"].get<double>() << "<="
               << r.scope["c_disjoint"].get<double>() << "^2";
    }
  });

  criterion(9, "x = e_1 with b = 2: the selections {2, ..., m + 1} discard x", 5, [](Outcome& o) {
    const std::vector<std::uint64_t> a{1, 2, 3}, b{2};
    const std::vector<FiniteVector> none;
    for (double t : {0.25, 0.5, 1.0}) {
      const auto r = suite_abt_quasi_greedy(SpaceSpec::lp(2), 1.0, none, a, b, t);
      o.require(check_of(r, "shifted_selection_discards_e1").status == CheckStatus::pass,
                "{2..m+1} not selected or not vanishing");
      o.require(check_of(r, "selections_avoiding_index_one_vanish").status == CheckStatus::pass,
                "a selection avoiding index 1 keeps e_1");
      if (t == 0.5) o.detail << " " << check_of(r, "all_selections_vanish").detail;
    }
  });

  criterion(10, "l2 is 1-greedy; the signed subsequence space is not", 180, [](Outcome& o) {
    GreedyInequalityOptions opt;
    opt.m_max = 8;
    opt.bound = 1.0 + 1e-6;
    const auto l2 = suite_greedy_inequality(SpaceSpec::lp(2), samples(200, 16, 10, 1000), opt);
    o.require(l2.overall, "l2 fitted constant above 1 + 1e-6");
    o.detail << " l2 fitted " << check_of(l2, "fitted_constant").worst_ratio.value_or(0.0);

    // Interleaved vectors: the greedy step removes the slightly larger even
    // coordinates and leaves a spread-out set of ones.
    std::vector<FiniteVector> xs;
    for (Index k = 1; k <= 12; ++k) {
      FiniteVector x(2 * k);
      for (Index n = 1; n <= 2 * k; ++n) x.set(n, n % 2 ? 1.0 : 1.25);
      xs.push_back(x);
    }
    GreedyInequalityOptions neg;
    neg.m_max = 12;
    neg.functional_options.search = SearchMode::structured;
    const auto s = suite_greedy_inequality(SpaceSpec::signed_subsequence(), xs, neg);
    const double c4 = check_of(s, "fitted_constant_m4").worst_ratio.value_or(0.0);
    const double c12 = check_of(s, "fitted_constant_m12").worst_ratio.value_or(0.0);
    o.require(c12 > c4, "fitted constant does not grow from m = 4 to m = 12");
    o.detail << "; signed subsequence fitted " << c4 << " at m = 4, " << c12 << " at m = 12";
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
