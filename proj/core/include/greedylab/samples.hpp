#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greedylab/finite_vector.hpp"

namespace greedylab {

enum class SampleFamily { gaussian, spiky, signed_indicator, geometric };

std::string_view to_string(SampleFamily family);
std::optional<SampleFamily> parse_sample_family(std::string_view name);

struct SampleOptions {
  std::size_t count = 100;
  /// Supports are drawn from [first_index, last_index].
  Index first_index = 1;
  Index last_index = 16;
  std::size_t min_support = 1;
  std::size_t max_support = 8;
  /// Ambient dimension of the produced vectors; defaults to last_index.
  std::optional<Index> ambient_dim;
  std::uint64_t seed = 0;
  /// Families are used round-robin.
  std::vector<SampleFamily> families{SampleFamily::gaussian, SampleFamily::spiky, SampleFamily::signed_indicator,
                                     SampleFamily::geometric};

  std::string describe() const;
};

/// Seeded random test vectors. The same options always produce the same vectors.
///   gaussian: N(0, 1) coefficients
///   spiky: one coefficient of size 5 to 10, the rest N(0, 0.1^2)
///   signed_indicator: random signs
///   geometric: +-2^{-j} along a random ranking of the support
std::vector<FiniteVector> make_samples(const SampleOptions& options);

}  // namespace greedylab
