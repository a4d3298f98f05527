#pragma once

#include <cstdint>
#include <span>

#include "onebit/channels/quantize.hpp"
#include "onebit/numkit/linear_operator.hpp"
#include "onebit/recovery/report.hpp"
#include "onebit/sensing/ensemble.hpp"

namespace onebit::recovery {

/// How the power method is shifted for the indefinite one-bit matrices.
enum class ShiftPolicy {
  /// Plain power method; converges to the eigenvalue of largest magnitude.
  kNone,
  /// mu = (1/m) (||A1||_F^2 + ||A2||_F^2), a bound on the spectral norm.
  kNormBound,
  /// mu = short unshifted power-method estimate of the spectral radius.
  kAuto,
};

struct SpectralOptions {
  double tol = 1e-10;
  int max_iters = 20000;
  std::uint64_t seed = 0;
  ShiftPolicy shift = ShiftPolicy::kAuto;
  int radius_probe_iters = 30;
};

/// (1/m) sum_i y_i (a1_i <a1_i, r> - a2_i <a2_i, r>), without forming the matrix.
ComplexVec one_bit_matvec(const channels::QuantizedData& data, const ComplexVec& r);

/// (1/m) sum_i y_i (R1_i a1_i <a1_i, r> - R2_i a2_i <a2_i, r>).
ComplexVec weighted_one_bit_matvec(const channels::QuantizedData& data, const ComplexVec& r);

/// (1/m) sum_i b_i a_i <a_i, r>.
ComplexVec subexp_matvec(const LinearOperator& op, std::span<const double> b, const ComplexVec& r);

/// Top eigenvector of the one-bit matrix. lambda_hat estimates lambda and is
/// corrected for the shift. Throws ConfigError if weights are present.
RecoveryReport one_bit_phase(const channels::QuantizedData& data,
                             const SpectralOptions& options = {});

/// Top eigenvector of the ratio-weighted one-bit matrix; requires weights.
RecoveryReport weighted_one_bit_phase(const channels::QuantizedData& data,
                                      const SpectralOptions& options = {});

/// Top eigenvector of (1/m) sum_i b_i a_i a_i*. The matrix is PSD, so the
/// power method runs unshifted regardless of options.shift.
RecoveryReport subexp_phase(const LinearOperator& op, std::span<const double> b,
                            const SpectralOptions& options = {});
RecoveryReport subexp_phase(const sensing::PlainEnsemble& ensemble, std::span<const double> b,
                            const SpectralOptions& options = {});

}  // namespace onebit::recovery
