#pragma once

#include <algorithm>

#include "wayex/rng.hpp"

namespace wayex::detail {

// Gaussian perturbation kept inside [lo, hi]: resample up to 100 times, then
// clamp. Physical bounds win over the unbounded noise model.
inline double perturb_bounded(double nominal, double sigma, double lo,
                              double hi, Rng& rng, long& clamp_events) {
  if (sigma == 0.0) return nominal;
  for (int attempt = 0; attempt < 100; ++attempt) {
    const double v = rng.normal(nominal, sigma);
    if (v >= lo && v <= hi) return v;
  }
  ++clamp_events;
  return std::clamp(rng.normal(nominal, sigma), lo, hi);
}

}  // namespace wayex::detail
