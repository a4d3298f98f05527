#pragma once

#include <cstdint>
#include <span>

#include "onebit/recovery/altmin.hpp"
#include "onebit/recovery/report.hpp"
#include "onebit/recovery/spectral.hpp"
#include "onebit/sensing/ensemble.hpp"

namespace onebit::recovery {

struct ResampledOptions {
  /// Target accuracy; sets the number of stages, not a stopping tolerance.
  double epsilon = 0.1;
  double c_stages = 1.0;
  /// Multiply the stage count by n (t0 = ceil(c log(1/eps) n)).
  bool literal_stage_count = false;
  InitKind init = InitKind::kOneBit;
  SpectralOptions spectral{};
  CglsOptions ls{};
};

/// t0 = ceil(c log(1/eps)), times n when `literal`. Always >= 1.
int stage_count(double epsilon, double c_stages, std::size_t n, bool literal);

/// Measurement blocks [begin, begin + count) for t0 + 1 contiguous blocks of
/// floor(m / (t0 + 1)) units each; the remainder joins block 0.
struct Block {
  std::size_t begin = 0;
  std::size_t count = 0;
};
std::vector<Block> partition_blocks(std::size_t units, int stages);

/// AltMin with resampling over paired measurements. Block 0 (in pairs) feeds
/// the initializer; block t + 1 feeds stage t, whose update uses both rows of
/// every pair with the un-quantized intensities. Each block must hold at
/// least n scalar measurements (2 per pair), else ConfigError naming the
/// required m.
///
/// The trace holds one point per stage: the objective of the stage's
/// least-squares solve. The observer sees the initial point (0) and each stage.
RecoveryReport alt_min_resampled(const sensing::PairedEnsemble& ensemble,
                                 std::span<const double> b1, std::span<const double> b2,
                                 const ResampledOptions& options = {},
                                 const IterateObserver& observer = {});

/// Same over a plain ensemble; only kRandom and kSubExp inits apply.
RecoveryReport alt_min_resampled(const sensing::PlainEnsemble& ensemble,
                                 std::span<const double> b, const ResampledOptions& options = {},
                                 const IterateObserver& observer = {});

}  // namespace onebit::recovery
