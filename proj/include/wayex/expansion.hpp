#pragma once

#include <utility>

// Knowledge-expansion schedule: start/goal noise sigma* grows by a fixed
// increment whenever the rolling window's success rate clears the bar.
// sigma* starts at 0 and never decreases.

namespace wayex {

struct ExpansionParams {
  double increment = 0.001;
  double success_threshold = 0.05;
  int cadence = 25;  // episodes per window
};

class ExpansionState {
 public:
  explicit ExpansionState(ExpansionParams params = {}) : params_(params) {}

  // Call once per finished episode. At every cadence-th episode the window
  // is scored: rate >= threshold grows sigma, then the window resets.
  void record_episode(bool success) {
    ++window_episodes_;
    if (success) ++window_successes_;
    if (window_episodes_ == params_.cadence) {
      const double rate = static_cast<double>(window_successes_) /
                          static_cast<double>(window_episodes_);
      if (rate >= params_.success_threshold) sigma_ += params_.increment;
      window_episodes_ = 0;
      window_successes_ = 0;
    }
  }

  // One shared sigma* for the start state and for the goal, mean fixed at 0.
  std::pair<double, double> current_noise() const { return {sigma_, sigma_}; }

  double sigma() const { return sigma_; }
  int window_episodes() const { return window_episodes_; }
  int window_successes() const { return window_successes_; }
  const ExpansionParams& params() const { return params_; }

 private:
  ExpansionParams params_;
  double sigma_ = 0.0;
  int window_episodes_ = 0;
  int window_successes_ = 0;
};

}  // namespace wayex
