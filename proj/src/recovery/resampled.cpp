#include "onebit/recovery/resampled.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "onebit/channels/quantize.hpp"
#include "onebit/errors.hpp"
#include "onebit/recovery/pipeline.hpp"

namespace onebit::recovery {
namespace {

void check_options(const ResampledOptions& options) {
  if (!(options.epsilon > 0.0 && options.epsilon < 1.0))
    throw ConfigError("alt_min_resampled: epsilon must lie in (0, 1)");
  if (!(options.c_stages > 0.0)) throw ConfigError("alt_min_resampled: c_stages must be > 0");
}

// One u/x update on a fresh block.
double stage_update(const LinearOperator& op, std::span<const double> b, ComplexVec& x,
                    const CglsOptions& ls_options, bool& converged) {
  if (b.size() != op.rows()) throw DimensionError("alt_min_resampled: block size mismatch");
  ComplexVec rhs = op.forward(x);
  phase_op_into(rhs.span(), rhs.span());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!(b[i] >= 0.0)) throw ConfigError("alt_min_resampled: intensities must be >= 0");
    rhs[i] *= std::sqrt(b[i]);
  }
  CglsResult ls = cgls(op, rhs, ls_options, x);
  converged = converged && ls.converged;
  x = std::move(ls.x);
  return ls.residual_norm_sq;
}

std::string shortfall(std::size_t n, int stages, std::size_t per_unit, std::size_t m) {
  const std::size_t blocks = static_cast<std::size_t>(stages) + 1;
  const std::size_t units = (n + per_unit - 1) / per_unit;
  return "alt_min_resampled: " + std::to_string(stages) + " stages need " +
         std::to_string(blocks) + " blocks of >= " + std::to_string(n) +
         " measurements; requires m >= " + std::to_string(units * blocks) + " (got " +
         std::to_string(m) + ")";
}

}  // namespace

int stage_count(double epsilon, double c_stages, std::size_t n, bool literal) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("stage_count: epsilon must lie in (0, 1)");
  if (!(c_stages > 0.0)) throw ConfigError("stage_count: c_stages must be > 0");
  double t = c_stages * std::log(1.0 / epsilon);
  if (literal) t *= static_cast<double>(n);
  const double stages = std::ceil(t - 1e-12);
  if (stages > 1e6) throw ConfigError("stage_count: more than 1e6 stages");
  return std::max(1, static_cast<int>(stages));
}

std::vector<Block> partition_blocks(std::size_t units, int stages) {
  const std::size_t blocks = static_cast<std::size_t>(stages) + 1;
  const std::size_t size = units / blocks;
  const std::size_t extra = units - size * blocks;
  std::vector<Block> out;
  out.reserve(blocks);
  out.push_back({0, size + extra});
  for (std::size_t k = 1; k < blocks; ++k) out.push_back({extra + k * size, size});
  return out;
}

RecoveryReport alt_min_resampled(const sensing::PairedEnsemble& ensemble,
                                 std::span<const double> b1, std::span<const double> b2,
                                 const ResampledOptions& options,
                                 const IterateObserver& observer) {
  check_options(options);
  const std::size_t n = ensemble.n();
  const std::size_t m = ensemble.m();
  if (b1.size() != m || b2.size() != m)
    throw DimensionError("alt_min_resampled: intensity count != pairs");
  const int stages = stage_count(options.epsilon, options.c_stages, n, options.literal_stage_count);
  const std::vector<Block> blocks = partition_blocks(m, stages);
  if (2 * blocks.back().count < n) throw ConfigError(shortfall(n, stages, 2, m));

  const Block& head = blocks.front();
  const sensing::PairedEnsemble init_block = ensemble.block(head.begin, head.count);
  const sensing::PairedArms init_arms = init_block.arms();
  const auto init_b1 = b1.subspan(head.begin, head.count);
  const auto init_b2 = b2.subspan(head.begin, head.count);

  InitInputs inputs{.dim = n};
  std::optional<channels::QuantizedData> labels;
  std::vector<double> init_stacked_b;
  OperatorPtr init_stacked;
  if (options.init == InitKind::kOneBit || options.init == InitKind::kWeightedOneBit) {
    labels = channels::quantize_observed(init_arms, init_b1, init_b2,
                                         options.init == InitKind::kWeightedOneBit);
    inputs.labels = &*labels;
  } else if (options.init == InitKind::kSubExp) {
    init_stacked = init_arms.stacked();
    init_stacked_b.assign(init_b1.begin(), init_b1.end());
    init_stacked_b.insert(init_stacked_b.end(), init_b2.begin(), init_b2.end());
    inputs.stacked = init_stacked.get();
    inputs.stacked_b = init_stacked_b;
  }
  const RecoveryReport init = initialize(options.init, inputs, options.spectral);

  RecoveryReport report{.estimate = init.estimate};
  report.lambda_hat = init.lambda_hat;
  report.converged = true;
  if (observer) observer(0, report.estimate);
  for (int t = 0; t < stages; ++t) {
    const Block& block = blocks[static_cast<std::size_t>(t) + 1];
    const sensing::PairedArms arms = ensemble.block(block.begin, block.count).arms();
    const OperatorPtr op = arms.stacked();
    std::vector<double> b(b1.begin() + static_cast<std::ptrdiff_t>(block.begin),
                          b1.begin() + static_cast<std::ptrdiff_t>(block.begin + block.count));
    b.insert(b.end(), b2.begin() + static_cast<std::ptrdiff_t>(block.begin),
             b2.begin() + static_cast<std::ptrdiff_t>(block.begin + block.count));
    const double objective = stage_update(*op, b, report.estimate, options.ls, report.converged);
    report.iterations = t + 1;
    report.trace.push_back({t + 1, objective});
    if (observer) observer(t + 1, report.estimate);
  }
  return report;
}

RecoveryReport alt_min_resampled(const sensing::PlainEnsemble& ensemble,
                                 std::span<const double> b, const ResampledOptions& options,
                                 const IterateObserver& observer) {
  check_options(options);
  if (options.init != InitKind::kRandom && options.init != InitKind::kSubExp)
    throw ConfigError("alt_min_resampled: plain ensembles support only random or subexp init");
  const std::size_t n = ensemble.n();
  const std::size_t m = ensemble.m();
  if (b.size() != m) throw DimensionError("alt_min_resampled: intensity count != rows");
  const int stages = stage_count(options.epsilon, options.c_stages, n, options.literal_stage_count);
  const std::vector<Block> blocks = partition_blocks(m, stages);
  if (blocks.back().count < n) throw ConfigError(shortfall(n, stages, 1, m));

  const Block& head = blocks.front();
  const OperatorPtr init_op = ensemble.block(head.begin, head.count).op();
  const InitInputs inputs{.stacked = init_op.get(),
                          .stacked_b = b.subspan(head.begin, head.count),
                          .dim = n};
  const RecoveryReport init = initialize(options.init, inputs, options.spectral);

  RecoveryReport report{.estimate = init.estimate};
  report.lambda_hat = init.lambda_hat;
  report.converged = true;
  if (observer) observer(0, report.estimate);
  for (int t = 0; t < stages; ++t) {
    const Block& block = blocks[static_cast<std::size_t>(t) + 1];
    const OperatorPtr op = ensemble.block(block.begin, block.count).op();
    const double objective = stage_update(*op, b.subspan(block.begin, block.count),
                                          report.estimate, options.ls, report.converged);
    report.iterations = t + 1;
    report.trace.push_back({t + 1, objective});
    if (observer) observer(t + 1, report.estimate);
  }
  return report;
}

}  // namespace onebit::recovery
