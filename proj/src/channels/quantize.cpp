#include "onebit/channels/quantize.hpp"

#include <cmath>
#include <string>
#include <variant>

#include "onebit/errors.hpp"
#include "onebit/sensing/dense_rows.hpp"

namespace onebit::channels {

Sign quantize(double b1, double b2) { return static_cast<Sign>((b1 > b2) - (b1 < b2)); }

RatioWeights ratio_weights(double b1, double b2) {
  if (!(b1 >= 0.0) || !(b2 >= 0.0)) throw ConfigError("ratio_weights: intensities must be >= 0");
  const double total = b1 + b2;
  if (!(total > 0.0)) throw ConfigError("ratio_weights: b1 + b2 must be positive");
  return {b1 / total, b2 / total};
}

void QuantizedData::validate() const {
  arms.validate();
  if (y.size() != arms.pairs()) throw DimensionError("QuantizedData: label count != pairs");
  for (const Sign s : y) {
    if (s < -1 || s > 1) throw DimensionError("QuantizedData: label outside {-1, 0, 1}");
  }
  if (weights) {
    if (weights->size() != y.size()) throw DimensionError("QuantizedData: weight count != pairs");
    for (const auto& w : *weights) {
      if (w.r1 < 0.0 || w.r2 < 0.0 || w.r1 > 1.0 || w.r2 > 1.0 ||
          std::abs(w.r1 + w.r2 - 1.0) > 1e-12) {
        throw DimensionError("QuantizedData: ratio weights must lie in [0,1] and sum to 1");
      }
    }
  }
}

QuantizedData quantize_arms(const sensing::PairedArms& arms, const ComplexVec& x0,
                            const MeasurementModel& model, Stream& rng, bool with_weights) {
  arms.validate();
  if (x0.size() != arms.dim()) throw DimensionError("quantize_signal: x0 dimension != n");
  if (!(norm(x0) > 0.0)) throw ConfigError("quantize_signal: x0 must be nonzero");
  validate(model);
  if (with_weights && !is_identity(model)) {
    throw ConfigError("ratio weights are only supported with the identity model (got '" +
                      to_spec(model) + "')");
  }

  const std::vector<double> b1 = sensing::intensities(*arms.first, x0);
  const std::vector<double> b2 = sensing::intensities(*arms.second, x0);

  QuantizedData data{.arms = arms, .y = std::vector<Sign>(b1.size())};
  for (std::size_t i = 0; i < b1.size(); ++i) {
    data.y[i] = static_cast<Sign>(perturbed_sign(model, b1[i], b2[i], rng));
  }
  if (with_weights) {
    std::vector<RatioWeights> w(b1.size());
    for (std::size_t i = 0; i < b1.size(); ++i) {
      if (b1[i] + b2[i] > 0.0) {
        w[i] = ratio_weights(b1[i], b2[i]);
      } else {
        data.y[i] = 0;  // dropped pair
      }
    }
    data.weights = std::move(w);
  }
  return data;
}

QuantizedData quantize_signal(const sensing::PairedEnsemble& ensemble, const ComplexVec& x0,
                              const MeasurementModel& model, Stream& rng, bool with_weights) {
  return quantize_arms(ensemble.arms(), x0, model, rng, with_weights);
}

QuantizedData quantize_observed(const sensing::PairedArms& arms, std::span<const double> b1,
                                std::span<const double> b2, bool with_weights) {
  arms.validate();
  if (b1.size() != arms.pairs() || b2.size() != arms.pairs()) {
    throw DimensionError("quantize_observed: intensity count != pairs");
  }
  QuantizedData data{.arms = arms, .y = std::vector<Sign>(b1.size())};
  for (std::size_t i = 0; i < b1.size(); ++i) data.y[i] = quantize(b1[i], b2[i]);
  if (with_weights) {
    std::vector<RatioWeights> w(b1.size());
    for (std::size_t i = 0; i < b1.size(); ++i) {
      if (b1[i] + b2[i] > 0.0) {
        w[i] = ratio_weights(b1[i], b2[i]);
      } else {
        data.y[i] = 0;
      }
    }
    data.weights = std::move(w);
  }
  return data;
}

ObservedPairs observe_pairs(const sensing::PairedArms& arms, const ComplexVec& x0,
                            const MeasurementModel& model, Stream& rng, bool with_weights) {
  arms.validate();
  if (x0.size() != arms.dim()) throw DimensionError("observe_pairs: x0 dimension != n");
  validate(model);
  if (with_weights && !is_identity(model)) {
    throw ConfigError("ratio weights are only supported with the identity model (got '" +
                      to_spec(model) + "')");
  }
  const std::vector<double> clean1 = sensing::intensities(*arms.first, x0);
  const std::vector<double> clean2 = sensing::intensities(*arms.second, x0);
  const bool tanh = std::holds_alternative<TanhDistortion>(model);

  ObservedPairs out{.b1 = std::vector<double>(clean1.size()),
                    .b2 = std::vector<double>(clean2.size()),
                    .labels = {.arms = arms, .y = {}, .weights = std::nullopt}};
  for (std::size_t i = 0; i < clean1.size(); ++i) {
    out.b1[i] = apply_model(model, clean1[i], rng);
    out.b2[i] = apply_model(model, clean2[i], rng);
  }
  out.labels = quantize_observed(arms, out.b1, out.b2, with_weights);
  if (tanh) {
    for (std::size_t i = 0; i < clean1.size(); ++i) {
      out.labels.y[i] = static_cast<Sign>(perturbed_sign(model, clean1[i], clean2[i], rng));
    }
  }
  return out;
}

}  // namespace onebit::channels
