#include "greedylab/samples.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "greedylab/error.hpp"

namespace greedylab {

std::string_view to_string(SampleFamily family) {
  switch (family) {
    case SampleFamily::gaussian: return "gaussian";
    case SampleFamily::spiky: return "spiky";
    case SampleFamily::signed_indicator: return "signed_indicator";
    case SampleFamily::geometric: return "geometric";
  }
  return "unknown";
}

std::optional<SampleFamily> parse_sample_family(std::string_view name) {
  for (auto f : {SampleFamily::gaussian, SampleFamily::spiky, SampleFamily::signed_indicator, SampleFamily::geometric}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string SampleOptions::describe() const {
  std::string fams;
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (i) fams += ",";
    fams += to_string(families[i]);
  }
  return std::to_string(count) + " vectors, support " + std::to_string(min_support) + ".." +
         std::to_string(max_support) + " in [" + std::to_string(first_index) + ", " + std::to_string(last_index) +
         "], families " + fams + ", seed " + std::to_string(seed);
}

std::vector<FiniteVector> make_samples(const SampleOptions& o) {
  if (o.first_index == 0 || o.last_index < o.first_index) fail(ErrorCode::invalid_argument, "empty sample index range");
  if (o.families.empty()) fail(ErrorCode::invalid_argument, "at least one sample family is required");
  const Index width = o.last_index - o.first_index + 1;
  const std::size_t hi = static_cast<std::size_t>(std::min<Index>(o.max_support, width));
  const std::size_t lo = std::max<std::size_t>(1, std::min(o.min_support, hi));
  const Index ambient = o.ambient_dim.value_or(o.last_index);
  if (ambient < o.last_index) fail(ErrorCode::invalid_argument, "ambient dimension below the sample range");

  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<FiniteVector> out;
  out.reserve(o.count);
  for (std::size_t i = 0; i < o.count; ++i) {
    const auto family = o.families[i % o.families.size()];
    const std::size_t size = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    // Floyd's algorithm for a uniform subset.
    std::vector<Index> support;
    for (Index j = width - size; j < width; ++j) {
      const Index r = std::uniform_int_distribution<Index>(0, j)(rng);
      const Index pick = std::find(support.begin(), support.end(), r) == support.end() ? r : j;
      support.push_back(pick);
    }
    std::sort(support.begin(), support.end());
    std::vector<Entry> entries;
    entries.reserve(size);
    auto sign = [&] { return unit(rng) < 0.5 ? -1.0 : 1.0; };
    switch (family) {
      case SampleFamily::gaussian:
        for (Index s : support) entries.push_back({o.first_index + s, normal(rng)});
        break;
      case SampleFamily::spiky: {
        const std::size_t spike = std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
        for (std::size_t k = 0; k < size; ++k) {
          const double v = k == spike ? sign() * (5.0 + 5.0 * unit(rng)) : 0.1 * normal(rng);
          entries.push_back({o.first_index + support[k], v});
        }
        break;
      }
      case SampleFamily::signed_indicator:
        for (Index s : support) entries.push_back({o.first_index + s, sign()});
        break;
      case SampleFamily::geometric: {
        std::vector<std::size_t> rank(size);
        for (std::size_t k = 0; k < size; ++k) rank[k] = k;
        std::shuffle(rank.begin(), rank.end(), rng);
        for (std::size_t k = 0; k < size; ++k) {
          entries.push_back({o.first_index + support[k], sign() * std::ldexp(1.0, -static_cast<int>(rank[k]))});
        }
        break;
      }
    }
    out.emplace_back(std::move(entries), ambient);
  }
  return out;
}

}  // namespace greedylab
