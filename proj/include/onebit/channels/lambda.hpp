#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "onebit/channels/model.hpp"

namespace onebit::channels {

/// lambda = E[sign(theta(E1) - theta(E2)) (E1 - E2)], E1, E2 ~ Exp(1) i.i.d.
///
/// Closed forms exist for Identity (1) and ExponentialNoise
/// ((1 + 2 sqrt(sigma)) / (1 + sqrt(sigma))^2); other models return nullopt.
std::optional<double> lambda_closed_form(const MeasurementModel& model);

struct LambdaEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Monte-Carlo estimate of lambda with its standard error (sample standard
/// deviation / sqrt(samples)). Samples are drawn in chunks of 65536, chunk c
/// from the stream (seed, kMonteCarlo, c). Requires samples >= 1000.
LambdaEstimate lambda_monte_carlo(const MeasurementModel& model, std::size_t samples,
                                  std::uint64_t seed);

}  // namespace onebit::channels
