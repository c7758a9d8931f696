#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace greedylab {

struct Regularity {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// A function f: N -> R used for weighted indicators 1_{f,A} and as a
/// sparseness profile g. Every kind carries an overall scale factor, so
/// g(n) = n/2 is `power(-1).scaled(0.5)`.
class WeightFunction {
 public:
  enum class Kind { constant, alternating, reciprocal, power, geometric, table };

  static WeightFunction constant(double c);
  /// f(n) = (-1)^n
  static WeightFunction alternating();
  /// f(n) = 1/n
  static WeightFunction reciprocal();
  /// f(n) = n^{-q}
  static WeightFunction power(double q);
  /// f(n) = r^n
  static WeightFunction geometric(double r);
  /// f(n) = values[n-1]; undefined beyond the table.
  static WeightFunction table(std::vector<double> values);

  /// Parses the `KIND[:PARAM][*SCALE]` syntax produced by describe().
  static WeightFunction parse(std::string_view text);

  WeightFunction scaled(double factor) const;

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return param_; }
  double scale() const noexcept { return scale_; }

  double operator()(std::uint64_t n) const;
  /// Same formula on a real argument; used for block sizes too large for 64 bits.
  double at(double n) const;

  /// Largest n for which f is defined (table kind only).
  std::optional<std::uint64_t> domain_size() const;
  /// Bounds 0 < c1 <= |f(n)| <= c2 when f is regular.
  std::optional<Regularity> regularity() const;
  /// inf_n f(n)/n when it is positive and known in closed form.
  std::optional<double> ratio_infimum() const;

  std::string describe() const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  WeightFunction(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_ = Kind::constant;
  double param_ = 1.0;
  double scale_ = 1.0;
  std::vector<double> table_;
};

}  // namespace greedylab
