#pragma once

#include <cstdint>
#include <random>

namespace onebit {

/// Tags separating the independent random sub-streams drawn from one seed.
enum class Purpose : std::uint64_t {
  kSignal = 1,
  kRows,
  kRows1,
  kRows2,
  kMasks,
  kMasks1,
  kMasks2,
  kNoise,
  kNoise1,
  kNoise2,
  kPowerInit,
  kRandomInit,
  kTrial,
  kMonteCarlo,
  kEnsemble,
};

/// Mixes (seed, purpose, index) into a 64-bit key with splitmix64 rounds.
std::uint64_t derive_key(std::uint64_t seed, Purpose purpose, std::uint64_t index);

/// A value-typed random stream. Each stream is keyed by (seed, purpose,
/// index), so draws do not depend on the order in which streams are created
/// or consumed. Never share one stream between threads.
class Stream {
 public:
  explicit Stream(std::uint64_t key);
  Stream(std::uint64_t seed, Purpose purpose, std::uint64_t index = 0)
      : Stream(derive_key(seed, purpose, index)) {}

  /// Uniform on [0, 1).
  double uniform();
  double standard_normal();
  /// Exponential with the given mean (inverse-CDF).
  double exponential(double mean);
  /// Poisson(rate); rate 0 always yields 0.
  std::int64_t poisson(double rate);
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace onebit
