#include "onebit/numkit/power_iteration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "onebit/errors.hpp"
#include "onebit/rng.hpp"

namespace onebit {
namespace {

constexpr int kMaxRestarts = 3;

ComplexVec random_unit(std::size_t n, std::uint64_t seed, std::uint64_t attempt) {
  Stream stream(seed, Purpose::kPowerInit, attempt);
  std::vector<Complex> v(n);
  for (auto& e : v) {
    const double re = stream.standard_normal();
    const double im = stream.standard_normal();
    e = {re, im};
  }
  return normalized(ComplexVec(std::move(v)));
}

ComplexVec checked_image(const VecMap& matvec, const ComplexVec& r) {
  ComplexVec s = matvec(r);
  if (s.size() != r.size()) throw DimensionError("power_iteration: matvec changed the dimension");
  if (!all_finite(s.span())) throw NumericalError("power_iteration: matvec produced NaN/Inf");
  return s;
}

}  // namespace

PowerResult power_iteration(const VecMap& matvec, std::size_t n, const PowerOptions& options) {
  if (n == 0) throw DimensionError("power_iteration: dimension must be positive");
  if (!(options.tol > 0.0)) throw ConfigError("power_iteration: tol must be positive");
  if (options.max_iters < 1) throw ConfigError("power_iteration: max_iters must be >= 1");
  if (!(options.shift >= 0.0)) throw ConfigError("power_iteration: shift must be >= 0");

  PowerResult result{.eigvec = random_unit(n, options.seed, 0)};
  ComplexVec& r = result.eigvec;
  int restarts = 0;
  double lambda = 0.0;

  while (result.iterations < options.max_iters) {
    ComplexVec s = checked_image(matvec, r);
    if (options.shift != 0.0) axpy(options.shift, r.span(), s.span());
    lambda = norm(s);
    if (!(lambda > 1e-300)) {
      if (++restarts > kMaxRestarts) {
        throw NumericalError("power_iteration: operator maps every start to zero (" +
                             std::to_string(kMaxRestarts) + " restarts)");
      }
      r = random_unit(n, options.seed, static_cast<std::uint64_t>(restarts));
      continue;
    }
    s *= 1.0 / lambda;

    double diff_minus = 0.0;
    double diff_plus = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      diff_minus += std::norm(s[k] - r[k]);
      diff_plus += std::norm(s[k] + r[k]);
    }
    const double step = std::sqrt(std::min(diff_minus, diff_plus));

    r = std::move(s);
    ++result.iterations;
    result.steps.push_back(step);
    if (step <= options.tol) {
      result.converged = true;
      break;
    }
  }
  result.eigval = lambda - options.shift;
  return result;
}

double estimate_spectral_radius(const VecMap& matvec, std::size_t n, int iters,
                                std::uint64_t seed) {
  ComplexVec r = random_unit(n, seed, 0);
  double rho = 0.0;
  for (int j = 0; j < iters; ++j) {
    ComplexVec s = checked_image(matvec, r);
    rho = norm(s);
    if (!(rho > 1e-300)) return 0.0;
    s *= 1.0 / rho;
    r = std::move(s);
  }
  return rho;
}

}  // namespace onebit
