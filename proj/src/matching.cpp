#include "wayex/matching.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wayex/errors.hpp"
#include "wayex/kernels.hpp"

namespace wayex {

MatchResult nearest_waypoint(const StateVector& s_e,
                             const Demonstration& demo) {
  if (demo.waypoints.empty())
    throw std::invalid_argument("nearest_waypoint: empty demonstration");
  const std::size_t k = demo.param_dim();
  if (s_e.params.size() != k)
    throw std::invalid_argument(
        "nearest_waypoint: state dimensionality does not match demo");

  const auto& ops = kern::active();
  std::size_t best = 0;
  double best_sq = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < demo.waypoints.size(); ++t) {
    const double d =
        ops.sq_l2_diff(s_e.params.data(), demo.waypoints[t].params.data(), k);
    if (d <= best_sq) {  // <= keeps the largest index on ties
      best_sq = d;
      best = t;
    }
  }

  MatchResult match;
  match.index = best;
  match.distance_sq = best_sq;
  match.per_param_distances.resize(k);
  const auto& wp = demo.waypoints[best].params;
  for (std::size_t i = 0; i < k; ++i)
    match.per_param_distances[i] = std::abs(wp[i] - s_e.params[i]);
  match.is_proximal = is_prox_wp(match, demo);
  return match;
}

bool is_prox_wp(const MatchResult& match, const Demonstration& demo) {
  const auto& thresholds = demo.thresholds.at(match.index);
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (match.per_param_distances[i] > thresholds[i]) return false;
  }
  return true;
}

void register_outcome(Demonstration& demo, std::size_t index,
                      bool was_proximal, const RewardConfig& cfg) {
  int& failures = demo.failure_counts.at(index);
  if (was_proximal) {
    failures = 0;
    return;
  }
  if (++failures >= cfg.failure_limit) {
    for (double& d : demo.thresholds[index]) d += cfg.epsilon;
    failures = 0;
  }
}

}  // namespace wayex
