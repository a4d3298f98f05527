#pragma once

#include <cstddef>
#include <cstdint>

#include "onebit/numkit/complex_vec.hpp"
#include "onebit/rng.hpp"

namespace onebit::sensing {

/// Entries with independent real and imaginary parts ~ Normal(0, 1/2), so
/// E|a_k|^2 = 1 and E||a||^2 = n.
ComplexVec sample_complex_gaussian(std::size_t n, Stream& rng);

double sample_exponential(double mean, Stream& rng);
std::int64_t sample_poisson(double rate, Stream& rng);

}  // namespace onebit::sensing
