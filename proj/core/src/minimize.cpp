#include "greedylab/minimize.hpp"

#include <algorithm>
#include <cmath>

#include "greedylab/error.hpp"

namespace greedylab {

LineMinimum golden_section(const std::function<double(double)>& fn, double lo, double hi, double rel_tol) {
  if (!(lo <= hi)) fail(ErrorCode::invalid_argument, "golden section needs lo <= hi");
  constexpr double kInvPhi = 0.6180339887498949;
  LineMinimum best{lo, fn(lo), 1};
  auto consider = [&](double x, double v) {
    if (v < best.value) best = {x, v, best.evaluations};
  };
  consider(hi, fn(hi));
  ++best.evaluations;
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = fn(c), fd = fn(d);
  best.evaluations += 2;
  consider(c, fc);
  consider(d, fd);
  while (b - a > rel_tol * scale && best.evaluations < 400) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = fn(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = fn(d);
      consider(d, fd);
    }
    ++best.evaluations;
  }
  return best;
}

}  // namespace greedylab
