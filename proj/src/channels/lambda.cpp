#include "onebit/channels/lambda.hpp"

#include <algorithm>
#include <cmath>

#include "onebit/errors.hpp"
#include "onebit/rng.hpp"

namespace onebit::channels {

std::optional<double> lambda_closed_form(const MeasurementModel& model) {
  if (is_identity(model)) return 1.0;
  if (const auto* m = std::get_if<ExponentialNoise>(&model)) {
    const double s = std::sqrt(m->sigma);
    return (1.0 + 2.0 * s) / ((1.0 + s) * (1.0 + s));
  }
  return std::nullopt;
}

LambdaEstimate lambda_monte_carlo(const MeasurementModel& model, std::size_t samples,
                                  std::uint64_t seed) {
  if (samples < 1000) throw ConfigError("lambda_monte_carlo: samples must be >= 1000");
  validate(model);

  constexpr std::size_t kChunk = 65536;
  // Welford accumulation.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t count = 0;
  for (std::size_t chunk = 0; chunk * kChunk < samples; ++chunk) {
    Stream rng(seed, Purpose::kMonteCarlo, chunk);
    const std::size_t end = std::min(samples, (chunk + 1) * kChunk);
    for (std::size_t s = chunk * kChunk; s < end; ++s) {
      const double e1 = rng.exponential(1.0);
      const double e2 = rng.exponential(1.0);
      const double value = perturbed_sign(model, e1, e2, rng) * (e1 - e2);
      ++count;
      const double delta = value - mean;
      mean += delta / static_cast<double>(count);
      m2 += delta * (value - mean);
    }
  }
  const double variance = m2 / static_cast<double>(count - 1);
  return {mean, std::sqrt(variance / static_cast<double>(count))};
}

}  // namespace onebit::channels
