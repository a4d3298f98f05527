#include "onebit/recovery/pipeline.hpp"

#include "onebit/errors.hpp"
#include "onebit/rng.hpp"
#include "onebit/sensing/samplers.hpp"

namespace onebit::recovery {

std::vector<double> PairedObservations::stacked_intensities() const {
  std::vector<double> b(b1);
  b.insert(b.end(), b2.begin(), b2.end());
  return b;
}

RecoveryReport initialize(InitKind kind, const InitInputs& inputs, const SpectralOptions& options) {
  switch (kind) {
    case InitKind::kRandom: {
      if (inputs.dim == 0) throw ConfigError("initialize(random): dimension not set");
      Stream stream(options.seed, Purpose::kRandomInit);
      return {.estimate = normalized(sensing::sample_complex_gaussian(inputs.dim, stream)),
              .converged = true};
    }
    case InitKind::kSubExp:
      if (!inputs.stacked) throw ConfigError("initialize(subexp): no sensing operator");
      return subexp_phase(*inputs.stacked, inputs.stacked_b, options);
    case InitKind::kOneBit: {
      if (!inputs.labels) throw ConfigError("initialize(onebit): no one-bit labels");
      if (!inputs.labels->weights) return one_bit_phase(*inputs.labels, options);
      channels::QuantizedData unweighted{inputs.labels->arms, inputs.labels->y, std::nullopt};
      return one_bit_phase(unweighted, options);
    }
    case InitKind::kWeightedOneBit:
      if (!inputs.labels) throw ConfigError("initialize(weighted1bit): no one-bit labels");
      return weighted_one_bit_phase(*inputs.labels, options);
  }
  throw ConfigError("initialize: unknown init kind");
}

}  // namespace onebit::recovery
