#pragma once

#include <span>
#include <vector>

#include "onebit/channels/quantize.hpp"
#include "onebit/numkit/linear_operator.hpp"
#include "onebit/recovery/report.hpp"
#include "onebit/recovery/spectral.hpp"
#include "onebit/sensing/ensemble.hpp"

namespace onebit::recovery {

/// Paired intensities as observed (perturbation included) plus the stacked
/// view that AltMin and SubExpPhase consume: rows of arm 1, then arm 2.
struct PairedObservations {
  sensing::PairedArms arms;
  std::vector<double> b1;
  std::vector<double> b2;

  OperatorPtr stacked() const { return arms.stacked(); }
  std::vector<double> stacked_intensities() const;
};

/// Inputs an initializer may draw on. `labels` must be set for the one-bit
/// kinds (with weights for kWeightedOneBit); `stacked` and `stacked_b` for
/// kSubExp. kRandom only needs the dimension.
struct InitInputs {
  const channels::QuantizedData* labels = nullptr;
  const LinearOperator* stacked = nullptr;
  std::span<const double> stacked_b;
  std::size_t dim = 0;
};

/// Runs the chosen initializer. kRandom returns a unit complex Gaussian vector
/// from the (seed, kRandomInit) stream with zero iterations.
RecoveryReport initialize(InitKind kind, const InitInputs& inputs, const SpectralOptions& options);

}  // namespace onebit::recovery
