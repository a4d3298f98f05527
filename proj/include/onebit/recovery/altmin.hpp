#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "onebit/numkit/cgls.hpp"
#include "onebit/numkit/linear_operator.hpp"
#include "onebit/recovery/report.hpp"

namespace onebit::recovery {

struct AltMinOptions {
  int max_iters = 200;
  /// Stop when |f_k - f_{k-1}| <= tol * f_{k-1} for the objective f.
  double tol = 1e-12;
  CglsOptions ls{};
};

/// Called with (iteration, iterate); iteration 0 is the starting point.
using IterateObserver = std::function<void(int, const ComplexVec&)>;

/// MSE(x) = ||A x - Diag(sqrt(b)) Ph(A x)||^2.
double phase_mse(const LinearOperator& op, std::span<const double> b, const ComplexVec& x);

/// Alternating minimization for min_{x, |u_i| = 1} ||A x - Diag(sqrt(b)) u||^2:
/// u <- Ph(A x), then x <- least squares via warm-started CGLS.
///
/// The trace holds the objective after each x-update. Both half-steps are
/// minimizers (the CGLS warm start guarantees the x-step never increases the
/// residual), so the trace is non-increasing up to rounding. A CGLS failure
/// ends the run with converged = false.
RecoveryReport alt_min(const LinearOperator& op, std::span<const double> b,
                       const ComplexVec& x_init, const AltMinOptions& options = {},
                       const IterateObserver& observer = {});

struct Candidate {
  std::string name;
  ComplexVec x;
};

/// The candidate with the smallest phase_mse; ties go to the earlier one.
const Candidate& multi_init_select(const std::vector<Candidate>& candidates,
                                   const LinearOperator& op, std::span<const double> b);

}  // namespace onebit::recovery
