#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onebit/numkit/complex_vec.hpp"

namespace onebit::recovery {

struct TracePoint {
  int iteration = 0;
  /// Power-iteration step size, AltMin objective, or stage objective.
  double value = 0.0;
};

struct RecoveryReport {
  /// Unit norm for the spectral methods; AltMin estimates keep their scale.
  ComplexVec estimate;
  double lambda_hat = 0.0;
  int iterations = 0;
  std::vector<TracePoint> trace;
  bool converged = false;
};

enum class InitKind { kRandom, kSubExp, kOneBit, kWeightedOneBit };

/// Accepts random | subexp | onebit (1bit) | weighted1bit (weighted).
InitKind parse_init_kind(std::string_view name);
std::string to_string(InitKind kind);

}  // namespace onebit::recovery
