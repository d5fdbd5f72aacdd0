#pragma once

#include <cstddef>
#include <vector>

#include "wayex/core.hpp"
#include "wayex/demo.hpp"

// Nearest-neighbor waypoint lookup over the demonstration, the per-parameter
// proximity test, and the consecutive-failure threshold growth rule. The
// lookup is an exhaustive linear scan (demos stay tiny), which doubles as
// its own oracle.

namespace wayex {

struct MatchResult {
  std::size_t index = 0;                   // t of the matched waypoint
  bool is_proximal = false;                // every |p*_i - p_i| <= d_i
  std::vector<double> per_param_distances; // |p*_i - p_i|, K entries
  double distance_sq = 0.0;                // squared L2 over the params
};

// Minimizes the L2 norm over the goal-stripped params; ties break toward the
// largest index so equal distances favor progress. Throws on an empty demo
// or a dimensionality mismatch.
MatchResult nearest_waypoint(const StateVector& s_e, const Demonstration& demo);

// Per-parameter threshold test against the matched waypoint's d*_t.
bool is_prox_wp(const MatchResult& match, const Demonstration& demo);

// Success resets the waypoint's failure counter; `failure_limit` consecutive
// misses grow every component of its threshold by `epsilon` and reset.
void register_outcome(Demonstration& demo, std::size_t index,
                      bool was_proximal, const RewardConfig& cfg);

}  // namespace wayex
