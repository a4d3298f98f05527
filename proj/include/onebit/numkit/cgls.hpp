#pragma once

#include <optional>

#include "onebit/numkit/complex_vec.hpp"
#include "onebit/numkit/linear_operator.hpp"

namespace onebit {

struct CglsOptions {
  /// Relative normal-equation residual ||A*(b - Ax)|| / ||A* b||.
  double tol = 1e-10;
  /// 0 means 4 * n.
  int max_iters = 0;
};

struct CglsResult {
  ComplexVec x;
  int iterations = 0;
  double relative_residual = 0.0;
  /// ||A x - rhs||^2 of the returned x.
  double residual_norm_sq = 0.0;
  /// false: max_iters hit; x is the iterate with the smallest residual seen.
  bool converged = false;
};

/// Conjugate-gradient least squares for min ||A x - rhs||.
///
/// With a warm start the residual norm ||A x - rhs|| never exceeds that of the
/// starting point.
CglsResult cgls(const VecMap& apply, const VecMap& apply_adjoint, const ComplexVec& rhs,
                const CglsOptions& options = {},
                const std::optional<ComplexVec>& warm_start = std::nullopt);

CglsResult cgls(const LinearOperator& op, const ComplexVec& rhs, const CglsOptions& options = {},
                const std::optional<ComplexVec>& warm_start = std::nullopt);

}  // namespace onebit
