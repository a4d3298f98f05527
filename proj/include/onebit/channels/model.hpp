#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "onebit/rng.hpp"

namespace onebit::channels {

/// theta(z) = z.
struct Identity {};
/// theta(z) = tanh(alpha z), alpha > 0.
struct TanhDistortion {
  double alpha = 1.0;
};
/// theta(z) = z + nu with nu ~ Exp of variance sigma (mean sqrt(sigma)).
struct ExponentialNoise {
  double sigma = 0.0;
};
/// theta(z) = p with p ~ Poisson(z / eta).
struct PoissonNoise {
  double eta = 1.0;
};
/// theta(z) = z + sigma * max(g, 0), g ~ Normal(0, 1) per scalar measurement.
struct ClippedGaussianNoise {
  double sigma = 0.0;
};

using MeasurementModel =
    std::variant<Identity, TanhDistortion, ExponentialNoise, PoissonNoise, ClippedGaussianNoise>;

/// Throws ConfigError when a parameter is outside its range.
void validate(const MeasurementModel& model);

/// Grammar: identity | tanh:alpha=<f> | expnoise:sigma=<f> | poisson:eta=<f>
///        | clipgauss:sigma=<f>
MeasurementModel parse_model(std::string_view spec);
std::string to_spec(const MeasurementModel& model);

/// Family name as used in the spec grammar ("identity", "tanh", ...).
std::string family_name(const MeasurementModel& model);
/// The single numeric parameter, or 0 for Identity.
double parameter_of(const MeasurementModel& model);

bool is_identity(const MeasurementModel& model);

/// One draw of theta(z). Requires z >= 0.
double apply_model(const MeasurementModel& model, double z, Stream& rng);

/// sign(theta(b1) - theta(b2)) for one draw of the perturbation of each value,
/// in {-1, 0, +1}. The tanh difference is evaluated through
/// tanh(u) - tanh(v) = sinh(u - v) / (cosh(u) cosh(v)), so saturated values
/// still compare exactly.
int perturbed_sign(const MeasurementModel& model, double b1, double b2, Stream& rng);

}  // namespace onebit::channels
