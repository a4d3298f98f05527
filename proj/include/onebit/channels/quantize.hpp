#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "onebit/channels/model.hpp"
#include "onebit/numkit/complex_vec.hpp"
#include "onebit/rng.hpp"
#include "onebit/sensing/ensemble.hpp"

namespace onebit::channels {

using Sign = std::int8_t;

/// sign(b1 - b2); exact ties give 0.
Sign quantize(double b1, double b2);

struct RatioWeights {
  double r1 = 0.5;
  double r2 = 0.5;
};

/// (b1 / (b1 + b2), b2 / (b1 + b2)). Throws ConfigError when b1 + b2 == 0.
RatioWeights ratio_weights(double b1, double b2);

/// One-bit labels y_i in {-1, 0, +1} for the m pairs of `arms`, plus optional
/// ratio weights. y_i = 0 only for exact ties; tied pairs contribute nothing.
struct QuantizedData {
  sensing::PairedArms arms;
  std::vector<Sign> y;
  std::optional<std::vector<RatioWeights>> weights;

  std::size_t pairs() const { return y.size(); }
  std::size_t dim() const { return arms.dim(); }
  /// Shape and weight invariants; throws on violation.
  void validate() const;
};

/// y_i = sign(theta(b1_i) - theta(b2_i)) with b_k = |<a_k, x0>|^2.
///
/// Weights use the unperturbed intensities and are only offered with the
/// Identity model; requesting them under any other model throws ConfigError.
/// Noise draws come from `rng` in pair order (first arm, then second).
QuantizedData quantize_signal(const sensing::PairedEnsemble& ensemble, const ComplexVec& x0,
                              const MeasurementModel& model, Stream& rng, bool with_weights);

/// Same as quantize_signal for arbitrary paired arms (e.g. coded diffraction).
QuantizedData quantize_arms(const sensing::PairedArms& arms, const ComplexVec& x0,
                            const MeasurementModel& model, Stream& rng, bool with_weights);

/// Labels (and optionally ratio weights) from intensities that are already
/// observed, perturbation included.
QuantizedData quantize_observed(const sensing::PairedArms& arms, std::span<const double> b1,
                                std::span<const double> b2, bool with_weights);

/// Perturbed intensities of both arms together with their labels.
struct ObservedPairs {
  std::vector<double> b1;
  std::vector<double> b2;
  QuantizedData labels;
};

/// Draws theta(b1_i), theta(b2_i) in pair order, consuming `rng` exactly as
/// quantize_arms does, so the labels coincide with quantize_arms on the same
/// stream. Tanh labels use the exact comparator rather than the saturated
/// observed values.
ObservedPairs observe_pairs(const sensing::PairedArms& arms, const ComplexVec& x0,
                            const MeasurementModel& model, Stream& rng, bool with_weights);

}  // namespace onebit::channels
