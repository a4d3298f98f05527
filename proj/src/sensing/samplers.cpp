#include "onebit/sensing/samplers.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "onebit/errors.hpp"

namespace onebit::sensing {

ComplexVec sample_complex_gaussian(std::size_t n, Stream& rng) {
  if (n == 0) throw DimensionError("sample_complex_gaussian: dimension must be positive");
  const double scale = std::numbers::sqrt2 / 2.0;
  std::vector<Complex> v(n);
  for (auto& e : v) {
    const double re = rng.standard_normal();
    const double im = rng.standard_normal();
    e = {scale * re, scale * im};
  }
  return ComplexVec(std::move(v));
}

double sample_exponential(double mean, Stream& rng) { return rng.exponential(mean); }

std::int64_t sample_poisson(double rate, Stream& rng) { return rng.poisson(rate); }

}  // namespace onebit::sensing
