#include "onebit/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace onebit {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_key(std::uint64_t seed, Purpose purpose, std::uint64_t index) {
  std::uint64_t state = seed;
  std::uint64_t key = splitmix64(state);
  state = key ^ static_cast<std::uint64_t>(purpose);
  key = splitmix64(state);
  state = key ^ index;
  return splitmix64(state);
}

Stream::Stream(std::uint64_t key) : engine_(key) {}

double Stream::uniform() { return std::generate_canonical<double, 64>(engine_); }

double Stream::standard_normal() { return normal_(engine_); }

double Stream::exponential(double mean) {
  if (!(mean > 0.0)) throw std::invalid_argument("exponential: mean must be positive");
  return std::exponential_distribution<double>(1.0 / mean)(engine_);
}

std::int64_t Stream::poisson(double rate) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("poisson: rate must be finite and non-negative");
  }
  if (rate == 0.0) return 0;
  return std::poisson_distribution<std::int64_t>(rate)(engine_);
}

}  // namespace onebit
