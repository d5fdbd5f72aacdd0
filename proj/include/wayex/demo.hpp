#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wayex/core.hpp"
#include "wayex/env.hpp"

// The single state-only demonstration: an ordered waypoint list with
// per-waypoint threshold vectors and consecutive-failure counters. Actions
// are never stored; the file schema rejects them.

namespace wayex {

struct Demonstration {
  std::string env_name;
  std::vector<StateVector> waypoints;              // s*_0 ... s*_{l_d}
  std::vector<std::vector<double>> thresholds;     // d*_t, one K-vector each
  std::vector<int> failure_counts;                 // consecutive misses per t
  std::vector<double> goal;                        // g*

  std::size_t l_d() const { return waypoints.size() - 1; }
  std::size_t param_dim() const {
    return waypoints.empty() ? 0 : waypoints[0].params.size();
  }

  bool operator==(const Demonstration&) const = default;
};

// Runs the scripted expert and keeps only its states. Thresholds start at
// half the per-step parameter motion, floored at 0.005 (the first waypoint
// borrows the motion of the first step).
Demonstration record_demo(Env& env);

// JSON-lines: one header line (env, K, l_d, goal), one line per waypoint.
void save_demo(const Demonstration& demo, const std::filesystem::path& path);

// Throws ParseError naming the offending line on any malformed input,
// including files that carry action data.
Demonstration load_demo(const std::filesystem::path& path);

}  // namespace wayex
