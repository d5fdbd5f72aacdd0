#pragma once

#include <stdexcept>
#include <string>

namespace wayex {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when training hits a non-recoverable numeric state (NaN losses).
struct TrainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wayex
