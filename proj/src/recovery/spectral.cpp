#include "onebit/recovery/spectral.hpp"

#include <string>

#include "onebit/errors.hpp"
#include "onebit/numkit/power_iteration.hpp"

namespace onebit::recovery {
namespace {

// (1/m) [A1* diag(d1) A1 - A2* diag(d2) A2] r
ComplexVec paired_matvec(const sensing::PairedArms& arms, std::span<const double> d1,
                         std::span<const double> d2, const ComplexVec& r) {
  const std::size_t m = arms.pairs();
  ComplexVec z = arms.first->forward(r);
  for (std::size_t i = 0; i < m; ++i) z[i] *= d1[i];
  ComplexVec out = arms.first->adjoint(z);
  z = arms.second->forward(r);
  for (std::size_t i = 0; i < m; ++i) z[i] *= d2[i];
  out -= arms.second->adjoint(z);
  out *= 1.0 / static_cast<double>(m);
  return out;
}

void require_dim(const ComplexVec& r, std::size_t n) {
  if (r.size() != n) throw DimensionError("matvec: vector dimension != n");
}

RecoveryReport run_power(const VecMap& matvec, std::size_t n, double norm_bound,
                         ShiftPolicy policy, const SpectralOptions& options) {
  PowerOptions power{.tol = options.tol, .max_iters = options.max_iters, .seed = options.seed};
  switch (policy) {
    case ShiftPolicy::kNone:
      break;
    case ShiftPolicy::kNormBound:
      power.shift = norm_bound;
      break;
    case ShiftPolicy::kAuto:
      power.shift =
          estimate_spectral_radius(matvec, n, options.radius_probe_iters, options.seed + 1);
      break;
  }
  PowerResult result = power_iteration(matvec, n, power);
  RecoveryReport report{.estimate = std::move(result.eigvec),
                        .lambda_hat = result.eigval,
                        .iterations = result.iterations,
                        .converged = result.converged};
  report.trace.reserve(result.steps.size());
  for (std::size_t j = 0; j < result.steps.size(); ++j) {
    report.trace.push_back({static_cast<int>(j + 1), result.steps[j]});
  }
  return report;
}

double paired_norm_bound(const sensing::PairedArms& arms) {
  return (arms.first->frobenius_norm_sq() + arms.second->frobenius_norm_sq()) /
         static_cast<double>(arms.pairs());
}

}  // namespace

ComplexVec one_bit_matvec(const channels::QuantizedData& data, const ComplexVec& r) {
  require_dim(r, data.dim());
  std::vector<double> d(data.y.begin(), data.y.end());
  return paired_matvec(data.arms, d, d, r);
}

ComplexVec weighted_one_bit_matvec(const channels::QuantizedData& data, const ComplexVec& r) {
  if (!data.weights) throw ConfigError("weighted_one_bit_matvec: ratio weights are missing");
  require_dim(r, data.dim());
  const auto& w = *data.weights;
  std::vector<double> d1(data.pairs());
  std::vector<double> d2(data.pairs());
  for (std::size_t i = 0; i < data.pairs(); ++i) {
    d1[i] = data.y[i] * w[i].r1;
    d2[i] = data.y[i] * w[i].r2;
  }
  return paired_matvec(data.arms, d1, d2, r);
}

ComplexVec subexp_matvec(const LinearOperator& op, std::span<const double> b, const ComplexVec& r) {
  if (b.size() != op.rows()) throw DimensionError("subexp_matvec: b length != rows");
  require_dim(r, op.cols());
  ComplexVec z = op.forward(r);
  for (std::size_t i = 0; i < b.size(); ++i) z[i] *= b[i];
  ComplexVec out = op.adjoint(z);
  out *= 1.0 / static_cast<double>(b.size());
  return out;
}

RecoveryReport one_bit_phase(const channels::QuantizedData& data, const SpectralOptions& options) {
  data.validate();
  if (data.weights) {
    throw ConfigError("one_bit_phase: data carries ratio weights; use weighted_one_bit_phase");
  }
  // The labels are converted once; the closure then only does the two
  // operator round trips per step.
  const std::vector<double> d(data.y.begin(), data.y.end());
  const VecMap matvec = [&](const ComplexVec& r) { return paired_matvec(data.arms, d, d, r); };
  return run_power(matvec, data.dim(), paired_norm_bound(data.arms), options.shift, options);
}

RecoveryReport weighted_one_bit_phase(const channels::QuantizedData& data,
                                      const SpectralOptions& options) {
  data.validate();
  if (!data.weights) throw ConfigError("weighted_one_bit_phase: ratio weights are missing");
  std::vector<double> d1(data.pairs());
  std::vector<double> d2(data.pairs());
  for (std::size_t i = 0; i < data.pairs(); ++i) {
    d1[i] = data.y[i] * (*data.weights)[i].r1;
    d2[i] = data.y[i] * (*data.weights)[i].r2;
  }
  const VecMap matvec = [&](const ComplexVec& r) { return paired_matvec(data.arms, d1, d2, r); };
  return run_power(matvec, data.dim(), paired_norm_bound(data.arms), options.shift, options);
}

RecoveryReport subexp_phase(const LinearOperator& op, std::span<const double> b,
                            const SpectralOptions& options) {
  if (b.size() != op.rows()) throw DimensionError("subexp_phase: b length != rows");
  for (const double v : b) {
    if (!(v >= 0.0)) throw ConfigError("subexp_phase: intensities must be >= 0");
  }
  const VecMap matvec = [&](const ComplexVec& r) { return subexp_matvec(op, b, r); };
  return run_power(matvec, op.cols(), 0.0, ShiftPolicy::kNone, options);
}

RecoveryReport subexp_phase(const sensing::PlainEnsemble& ensemble, std::span<const double> b,
                            const SpectralOptions& options) {
  return subexp_phase(ensemble.rows(), b, options);
}

InitKind parse_init_kind(std::string_view name) {
  if (name == "random") return InitKind::kRandom;
  if (name == "subexp") return InitKind::kSubExp;
  if (name == "onebit" || name == "1bit") return InitKind::kOneBit;
  if (name == "weighted1bit" || name == "weighted") return InitKind::kWeightedOneBit;
  throw ConfigError("unknown init kind '" + std::string(name) +
                    "' (expected random | subexp | onebit | weighted1bit)");
}

std::string to_string(InitKind kind) {
  switch (kind) {
    case InitKind::kRandom:
      return "random";
    case InitKind::kSubExp:
      return "subexp";
    case InitKind::kOneBit:
      return "onebit";
    case InitKind::kWeightedOneBit:
      return "weighted1bit";
  }
  return "unknown";
}

}  // namespace onebit::recovery
