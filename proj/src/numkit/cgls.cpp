#include "onebit/numkit/cgls.hpp"

#include <cmath>

#include "onebit/errors.hpp"

namespace onebit {

CglsResult cgls(const VecMap& apply, const VecMap& apply_adjoint, const ComplexVec& rhs,
                const CglsOptions& options, const std::optional<ComplexVec>& warm_start) {
  if (!(options.tol > 0.0)) throw ConfigError("cgls: tol must be positive");

  const ComplexVec atb = apply_adjoint(rhs);
  const std::size_t n = atb.size();
  const int max_iters = options.max_iters > 0 ? options.max_iters : static_cast<int>(4 * n);
  const double ref = norm(atb);

  ComplexVec x = warm_start ? *warm_start : ComplexVec::zeros(n);
  if (x.size() != n) throw DimensionError("cgls: warm start has the wrong dimension");
  if (!(ref > 0.0)) {
    // A* rhs = 0: x = 0 is a minimizer.
    return {.x = ComplexVec::zeros(n), .iterations = 0, .relative_residual = 0.0,
            .residual_norm_sq = norm_sq(rhs.span()), .converged = true};
  }

  ComplexVec r = rhs;
  if (warm_start) r -= apply(x);
  ComplexVec s = apply_adjoint(r);
  ComplexVec p = s;
  double gamma = norm_sq(s.span());
  double res_sq = norm_sq(r.span());

  CglsResult result{.x = x,
                    .iterations = 0,
                    .relative_residual = std::sqrt(gamma) / ref,
                    .residual_norm_sq = res_sq};
  double best_res_sq = res_sq;
  if (result.relative_residual <= options.tol) {
    result.converged = true;
    return result;
  }

  for (int k = 1; k <= max_iters; ++k) {
    const ComplexVec q = apply(p);
    const double qq = norm_sq(q.span());
    if (!(qq > 0.0)) break;
    const double alpha = gamma / qq;
    axpy(alpha, p.span(), x.span());
    axpy(-alpha, q.span(), r.span());
    s = apply_adjoint(r);
    const double gamma_next = norm_sq(s.span());
    if (!std::isfinite(gamma_next)) throw NumericalError("cgls: non-finite residual");
    res_sq = norm_sq(r.span());

    const double rel = std::sqrt(gamma_next) / ref;
    result.iterations = k;
    if (res_sq <= best_res_sq) {
      best_res_sq = res_sq;
      result.x = x;
      result.relative_residual = rel;
      result.residual_norm_sq = res_sq;
    }
    if (rel <= options.tol) {
      result.converged = true;
      break;
    }
    const double beta = gamma_next / gamma;
    gamma = gamma_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = s[i] + beta * p[i];
  }
  return result;
}

CglsResult cgls(const LinearOperator& op, const ComplexVec& rhs, const CglsOptions& options,
                const std::optional<ComplexVec>& warm_start) {
  if (rhs.size() != op.rows()) throw DimensionError("cgls: rhs length does not match operator");
  return cgls([&op](const ComplexVec& v) { return op.forward(v); },
              [&op](const ComplexVec& v) { return op.adjoint(v); }, rhs, options, warm_start);
}

}  // namespace onebit
