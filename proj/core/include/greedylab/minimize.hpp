#pragma once

#include <functional>

namespace greedylab {

struct LineMinimum {
  double argmin = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for a convex function on [lo, hi]. Stops once the
/// bracket is narrower than rel_tol * max(1, |lo|, |hi|). The endpoints are
/// evaluated too, so a minimum on the boundary is found exactly.
LineMinimum golden_section(const std::function<double(double)>& fn, double lo, double hi, double rel_tol = 1e-9);

}  // namespace greedylab
