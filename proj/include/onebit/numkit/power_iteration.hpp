#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "onebit/numkit/complex_vec.hpp"
#include "onebit/numkit/linear_operator.hpp"

namespace onebit {

struct PowerOptions {
  /// Stop once successive normalized iterates differ by at most tol.
  double tol = 1e-10;
  int max_iters = 20000;
  std::uint64_t seed = 0;
  /// Spectral shift mu >= 0: iterate on (M + mu I) instead of M.
  double shift = 0.0;
};

struct PowerResult {
  /// ||(M + mu I) r|| - mu at the final step.
  double eigval = 0.0;
  ComplexVec eigvec;
  int iterations = 0;
  bool converged = false;
  /// Per-iteration step min(||r_j - r_{j-1}||, ||r_j + r_{j-1}||).
  std::vector<double> steps;
};

/// Matrix-free power method for a Hermitian operator given by `matvec`.
///
/// The random start is drawn from the (seed, kPowerInit) stream. A zero image
/// triggers a restart from a fresh random start, at most three times; NaN or
/// Inf in the image throws NumericalError.
PowerResult power_iteration(const VecMap& matvec, std::size_t n, const PowerOptions& options);

/// Rough dominant-magnitude estimate ||M r|| after `iters` unshifted steps.
/// Never exceeds the spectral radius.
double estimate_spectral_radius(const VecMap& matvec, std::size_t n, int iters,
                                std::uint64_t seed);

}  // namespace onebit
