#pragma once

#include <stdexcept>
#include <string>

namespace onebit {

/// Operand shapes do not agree (vector lengths, row counts, block sizes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine produced NaN/Inf, a zero iterate, or otherwise broke down.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-facing configuration: model specs, experiment parameters.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace onebit
