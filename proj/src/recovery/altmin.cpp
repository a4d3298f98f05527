#include "onebit/recovery/altmin.hpp"

#include <cmath>
#include <limits>

#include "onebit/errors.hpp"

namespace onebit::recovery {
namespace {

std::vector<double> checked_sqrt(std::span<const double> b, std::size_t rows) {
  if (b.size() != rows) throw DimensionError("alt_min: intensity count != operator rows");
  std::vector<double> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!(b[i] >= 0.0)) throw ConfigError("alt_min: intensities must be >= 0");
    out[i] = std::sqrt(b[i]);
  }
  return out;
}

// Diag(sqrt_b) Ph(z), written over z.
void phase_target(std::span<const double> sqrt_b, ComplexVec& z) {
  phase_op_into(z.span(), z.span());
  for (std::size_t i = 0; i < sqrt_b.size(); ++i) z[i] *= sqrt_b[i];
}

}  // namespace

double phase_mse(const LinearOperator& op, std::span<const double> b, const ComplexVec& x) {
  const std::vector<double> sqrt_b = checked_sqrt(b, op.rows());
  const ComplexVec ax = op.forward(x);
  ComplexVec target = ax;
  phase_target(sqrt_b, target);
  double s = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) s += std::norm(ax[i] - target[i]);
  return s;
}

RecoveryReport alt_min(const LinearOperator& op, std::span<const double> b,
                       const ComplexVec& x_init, const AltMinOptions& options,
                       const IterateObserver& observer) {
  if (x_init.size() != op.cols()) throw DimensionError("alt_min: x_init dimension != n");
  if (!(norm(x_init) > 0.0)) throw ConfigError("alt_min: x_init must be nonzero");
  if (options.max_iters < 1) throw ConfigError("alt_min: max_iters must be >= 1");
  const std::vector<double> sqrt_b = checked_sqrt(b, op.rows());
  double scale = 0.0;
  for (const double v : b) scale += v;

  RecoveryReport report{.estimate = x_init};
  if (observer) observer(0, report.estimate);
  double previous = std::numeric_limits<double>::infinity();

  for (int k = 1; k <= options.max_iters; ++k) {
    ComplexVec rhs = op.forward(report.estimate);
    phase_target(sqrt_b, rhs);
    CglsResult ls = cgls(op, rhs, options.ls, report.estimate);
    report.estimate = std::move(ls.x);
    report.iterations = k;
    const double objective = ls.residual_norm_sq;
    report.trace.push_back({k, objective});
    if (observer) observer(k, report.estimate);

    if (!ls.converged) {
      report.converged = false;
      return report;
    }
    // Exact fit (noiseless data started at the solution) or a stalled objective.
    if (objective <= 1e-28 * scale ||
        (std::isfinite(previous) && std::abs(previous - objective) <= options.tol * previous)) {
      report.converged = true;
      break;
    }
    previous = objective;
  }
  return report;
}

const Candidate& multi_init_select(const std::vector<Candidate>& candidates,
                                   const LinearOperator& op, std::span<const double> b) {
  if (candidates.empty()) throw ConfigError("multi_init_select: no candidates");
  std::size_t best = 0;
  double best_mse = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double mse = phase_mse(op, b, candidates[i].x);
    if (mse < best_mse) {
      best_mse = mse;
      best = i;
    }
  }
  return candidates[best];
}

}  // namespace onebit::recovery
