#include "greedylab/finite_vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "greedylab/error.hpp"

namespace greedylab {

namespace {

void check_index(Index n, Index ambient_dim) {
  if (n == 0) fail(ErrorCode::invalid_argument, "indices are 1-based; got 0");
  if (n > ambient_dim) {
    fail(ErrorCode::out_of_layout,
         "index " + std::to_string(n) + " exceeds ambient dimension " + std::to_string(ambient_dim));
  }
}

std::vector<Entry> merge(std::span<const Entry> a, std::span<const Entry> b, double sign) {
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back({b[j].index, sign * b[j].value});
      ++j;
    } else {
      const double v = a[i].value + sign * b[j].value;
      if (v != 0.0) out.push_back({a[i].index, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FiniteVector::FiniteVector(Index ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim == 0) fail(ErrorCode::invalid_argument, "ambient dimension must be positive");
}

FiniteVector::FiniteVector(std::vector<Entry> entries, Index ambient_dim) : FiniteVector(ambient_dim) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (std::size_t k = 0; k < entries.size(); ++k) {
    check_index(entries[k].index, ambient_dim);
    if (!std::isfinite(entries[k].value)) {
      fail(ErrorCode::invalid_argument, "non-finite coefficient at index " + std::to_string(entries[k].index));
    }
    if (k > 0 && entries[k].index == entries[k - 1].index) {
      fail(ErrorCode::invalid_argument, "duplicate index " + std::to_string(entries[k].index));
    }
  }
  std::erase_if(entries, [](const Entry& e) { return e.value == 0.0; });
  entries_ = std::move(entries);
}

FiniteVector FiniteVector::unit(Index n, Index ambient_dim) {
  return FiniteVector({{n, 1.0}}, ambient_dim);
}

double FiniteVector::operator[](Index n) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const Entry& e, Index key) { return e.index < key; });
  return (it != entries_.end() && it->index == n) ? it->value : 0.0;
}

IndexSet FiniteVector::support() const {
  IndexSet out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.index);
  return out;
}

Index FiniteVector::max_index() const noexcept { return entries_.empty() ? 0 : entries_.back().index; }

double FiniteVector::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e.value));
  return m;
}

void FiniteVector::set(Index n, double value) {
  check_index(n, ambient_dim_);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const Entry& e, Index key) { return e.index < key; });
  const bool present = it != entries_.end() && it->index == n;
  if (value == 0.0) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    entries_.insert(it, Entry{n, value});
  }
}

FiniteVector FiniteVector::with_ambient_dim(Index ambient_dim) const {
  return FiniteVector(entries_, ambient_dim);
}

FiniteVector FiniteVector::scaled(double factor) const {
  FiniteVector out(ambient_dim_);
  if (factor == 0.0) return out;
  out.entries_ = entries_;
  for (auto& e : out.entries_) e.value *= factor;
  return out;
}

FiniteVector operator+(const FiniteVector& x, const FiniteVector& y) {
  FiniteVector out(std::max(x.ambient_dim_, y.ambient_dim_));
  out.entries_ = merge(x.entries_, y.entries_, 1.0);
  return out;
}

FiniteVector operator-(const FiniteVector& x, const FiniteVector& y) {
  FiniteVector out(std::max(x.ambient_dim_, y.ambient_dim_));
  out.entries_ = merge(x.entries_, y.entries_, -1.0);
  return out;
}

bool is_sorted_set(std::span<const Index> set) {
  return std::adjacent_find(set.begin(), set.end(), std::greater_equal<>()) == set.end();
}

IndexSet make_index_set(std::vector<Index> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

}  // namespace greedylab
