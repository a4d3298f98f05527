#include "onebit/bench/experiments.hpp"

#include <cmath>
#include <ostream>

#include "onebit/bench/trials.hpp"
#include "onebit/channels/lambda.hpp"
#include "onebit/channels/model.hpp"
#include "onebit/channels/quantize.hpp"
#include "onebit/errors.hpp"
#include "onebit/recovery/altmin.hpp"
#include "onebit/recovery/pipeline.hpp"
#include "onebit/recovery/resampled.hpp"
#include "onebit/rng.hpp"
#include "onebit/sensing/cdp.hpp"
#include "onebit/sensing/dense_rows.hpp"
#include "onebit/sensing/ensemble.hpp"
#include "onebit/sensing/samplers.hpp"

namespace onebit::bench {
namespace {

using recovery::InitKind;

std::vector<double> concat(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<InitKind> init_kinds(const ExperimentConfig& config) {
  std::vector<InitKind> kinds;
  for (const auto& name : config.inits) kinds.push_back(recovery::parse_init_kind(name));
  if (kinds.empty()) throw ConfigError("no init kinds given");
  return kinds;
}

recovery::AltMinOptions altmin_options(const ExperimentConfig& config) {
  recovery::AltMinOptions options;
  options.max_iters = config.altmin_iters;
  options.tol = config.altmin_tol;
  options.ls.tol = config.ls_tol;
  return options;
}

// Everything an initializer can consume for one set of paired observations.
struct PairedProblem {
  sensing::PairedArms arms;
  ComplexVec x0;
  channels::ObservedPairs observed;
  OperatorPtr stacked;
  std::vector<double> stacked_b;
};

PairedProblem make_problem(sensing::PairedArms arms, ComplexVec x0,
                           const channels::MeasurementModel& model, Stream& noise,
                           bool with_weights) {
  channels::ObservedPairs observed = channels::observe_pairs(arms, x0, model, noise, with_weights);
  OperatorPtr stacked = arms.stacked();
  std::vector<double> stacked_b = concat(observed.b1, observed.b2);
  return {std::move(arms), std::move(x0), std::move(observed), std::move(stacked),
          std::move(stacked_b)};
}

recovery::RecoveryReport run_init(InitKind kind, const PairedProblem& problem,
                                  const recovery::SpectralOptions& options) {
  std::optional<channels::QuantizedData> weighted;
  const channels::QuantizedData* labels = &problem.observed.labels;
  if (kind == InitKind::kWeightedOneBit && !labels->weights) {
    // Ratio weights from the observed (possibly noisy) intensities.
    weighted = channels::quantize_observed(problem.arms, problem.observed.b1,
                                           problem.observed.b2, true);
    labels = &*weighted;
  }
  const recovery::InitInputs inputs{.labels = labels,
                                    .stacked = problem.stacked.get(),
                                    .stacked_b = problem.stacked_b,
                                    .dim = problem.x0.size()};
  return recovery::initialize(kind, inputs, options);
}

}  // namespace

recovery::ShiftPolicy parse_shift(std::string_view name) {
  if (name == "off") return recovery::ShiftPolicy::kNone;
  if (name == "bound") return recovery::ShiftPolicy::kNormBound;
  if (name == "on" || name == "auto") return recovery::ShiftPolicy::kAuto;
  throw ConfigError("unknown shift '" + std::string(name) + "' (expected on | off | auto | bound)");
}

recovery::SpectralOptions spectral_options(const ExperimentConfig& config, std::uint64_t seed) {
  recovery::SpectralOptions options;
  options.tol = config.tol;
  options.max_iters = config.max_iters;
  options.seed = seed;
  options.shift = parse_shift(config.shift);
  return options;
}

std::uint64_t trial_seed(const ExperimentConfig& config, std::size_t trial) {
  return derive_key(config.seed, Purpose::kTrial, trial);
}

ComplexVec make_signal(std::size_t n, std::uint64_t seed) {
  Stream stream(seed, Purpose::kSignal);
  return normalized(sensing::sample_complex_gaussian(n, stream));
}

// ---------------------------------------------------------------- lambda-sweep

std::vector<std::string> default_lambda_grid() {
  std::vector<std::string> grid{"identity"};
  for (const char* s : {"0.25", "0.5", "1", "2", "4"}) grid.push_back(std::string("expnoise:sigma=") + s);
  for (const char* a : {"0.5", "1", "2", "4", "8"}) grid.push_back(std::string("tanh:alpha=") + a);
  for (const char* e : {"0.5", "1", "2", "4"}) grid.push_back(std::string("poisson:eta=") + e);
  for (const char* s : {"0.4", "0.8"}) grid.push_back(std::string("clipgauss:sigma=") + s);
  return grid;
}

CsvTable run_lambda_sweep(const ExperimentConfig& config) {
  const std::vector<std::string> specs = config.models.empty() ? default_lambda_grid() : config.models;
  std::vector<channels::MeasurementModel> models;
  for (const auto& spec : specs) models.push_back(channels::parse_model(spec));

  const auto estimates = run_trials<channels::LambdaEstimate>(
      models.size(), config.threads, [&](std::size_t i) {
        return channels::lambda_monte_carlo(models[i], config.samples, trial_seed(config, i));
      });

  CsvTable table({"model", "param", "lambda_estimate", "std_error", "closed_form"});
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto closed = channels::lambda_closed_form(models[i]);
    table.add_row({channels::family_name(models[i]), format_double(channels::parameter_of(models[i])),
                   format_double(estimates[i].estimate), format_double(estimates[i].std_error),
                   closed ? format_double(*closed) : std::string()});
  }
  return table;
}

// ------------------------------------------------------------ distortion-sweep

DistortionTrial distortion_trial(const ExperimentConfig& config, double alpha, std::size_t trial,
                                 bool with_subexp) {
  const std::uint64_t seed = trial_seed(config, trial);
  const std::size_t n = config.n;
  const sensing::PairedEnsemble ensemble = sensing::build_paired_ensemble(n, config.pairs(), seed);
  const ComplexVec x0 = make_signal(n, seed);
  const channels::MeasurementModel model = channels::TanhDistortion{alpha};
  Stream noise(seed, Purpose::kNoise);
  const PairedProblem problem = make_problem(ensemble.arms(), x0, model, noise, false);
  const recovery::SpectralOptions options = spectral_options(config, seed);

  const auto one_bit = recovery::one_bit_phase(problem.observed.labels, options);
  DistortionTrial out{one_bit.estimate, dist_sq(one_bit.estimate, x0), 0.0};
  if (with_subexp) {
    const auto subexp = recovery::subexp_phase(*problem.stacked, problem.stacked_b, options);
    out.subexp_dist_sq = dist_sq(subexp.estimate, x0);
  }
  return out;
}

CsvTable run_distortion_sweep(const ExperimentConfig& config) {
  const std::size_t trials = static_cast<std::size_t>(config.trials);
  const std::size_t jobs = config.alphas.size() * trials;
  const auto results = run_trials<DistortionTrial>(jobs, config.threads, [&](std::size_t j) {
    return distortion_trial(config, config.alphas[j / trials], j % trials);
  });

  CsvTable table({"alpha", "method", "median_dist_sq", "iqr", "trials"});
  for (std::size_t a = 0; a < config.alphas.size(); ++a) {
    std::vector<double> one_bit;
    std::vector<double> subexp;
    for (std::size_t t = 0; t < trials; ++t) {
      one_bit.push_back(results[a * trials + t].one_bit_dist_sq);
      subexp.push_back(results[a * trials + t].subexp_dist_sq);
    }
    const std::string alpha = format_double(config.alphas[a]);
    const std::string count = std::to_string(trials);
    table.add_row({alpha, "1bitPhase", format_double(median(one_bit)), format_double(iqr(one_bit)), count});
    table.add_row({alpha, "SubExpPhase", format_double(median(subexp)), format_double(iqr(subexp)), count});
  }
  return table;
}

// ----------------------------------------------------------------- convergence

ConvergenceCurves convergence_curves(const ExperimentConfig& config, Sensing sensing) {
  const std::vector<InitKind> kinds = init_kinds(config);
  const std::size_t n = config.n;
  const std::size_t m = config.pairs();
  if (sensing == Sensing::kCodedDiffraction && m % n != 0)
    throw ConfigError("cdp-convergence: m must be a multiple of n (m = masks * n)");
  const channels::MeasurementModel model = channels::parse_model(config.model);
  const std::size_t trials = static_cast<std::size_t>(config.trials);
  const std::size_t points = static_cast<std::size_t>(config.altmin_iters) + 1;
  const recovery::AltMinOptions am = altmin_options(config);

  using TrialCurves = std::vector<std::vector<double>>;  // [init][iteration]
  const auto per_trial = run_trials<TrialCurves>(trials, config.threads, [&](std::size_t t) {
    const std::uint64_t seed = trial_seed(config, t);
    sensing::PairedArms arms = sensing == Sensing::kGaussian
                                   ? sensing::build_paired_ensemble(n, m, seed).arms()
                                   : sensing::build_cdp_pair(n, m / n, seed);
    Stream noise(seed, Purpose::kNoise);
    // Unit mean intensity in both modes: the unitary DFT spreads ||x0||^2 over
    // n outputs, so CDP signals carry norm sqrt(n).
    const double scale = sensing == Sensing::kGaussian ? 1.0 : std::sqrt(static_cast<double>(n));
    const PairedProblem problem =
        make_problem(std::move(arms), Complex(scale) * make_signal(n, seed), model, noise, false);
    const recovery::SpectralOptions options = spectral_options(config, seed);

    TrialCurves curves;
    for (const InitKind kind : kinds) {
      const recovery::RecoveryReport init = run_init(kind, problem, options);
      std::vector<double> curve;
      curve.reserve(points);
      recovery::alt_min(*problem.stacked, problem.stacked_b, init.estimate, am,
                        [&](int, const ComplexVec& x) { curve.push_back(dist_sq(x, problem.x0)); });
      while (curve.size() < points) curve.push_back(curve.back());
      curves.push_back(std::move(curve));
    }
    return curves;
  });

  ConvergenceCurves out(kinds.size(), std::vector<std::vector<double>>(trials));
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t k = 0; k < kinds.size(); ++k) out[k][t] = per_trial[t][k];
  }
  return out;
}

CsvTable convergence_table(const ExperimentConfig& config, const ConvergenceCurves& curves) {
  CsvTable table({"init", "iteration", "median_dist_sq"});
  const std::vector<InitKind> kinds = init_kinds(config);
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    const std::size_t points = curves[k].front().size();
    for (std::size_t it = 0; it < points; ++it) {
      std::vector<double> column;
      for (const auto& curve : curves[k]) column.push_back(curve[it]);
      table.add_row({recovery::to_string(kinds[k]), std::to_string(it), format_double(median(column))});
    }
  }
  return table;
}

CsvTable run_altmin_convergence(const ExperimentConfig& config) {
  return convergence_table(config, convergence_curves(config, Sensing::kGaussian));
}

CsvTable run_cdp_convergence(const ExperimentConfig& config) {
  return convergence_table(config, convergence_curves(config, Sensing::kCodedDiffraction));
}

// --------------------------------------------------------------------- recover

RecoverSummary run_recover(const ExperimentConfig& config) {
  const std::vector<InitKind> kinds = init_kinds(config);
  const Refine refine = parse_refine(config.refine);
  const channels::MeasurementModel model = channels::parse_model(config.model);
  bool wants_weights = false;
  for (const InitKind k : kinds) wants_weights |= k == InitKind::kWeightedOneBit;

  const std::size_t n = config.n;
  const std::uint64_t seed = config.seed;
  const sensing::PairedEnsemble ensemble = sensing::build_paired_ensemble(n, config.pairs(), seed);
  Stream noise(seed, Purpose::kNoise);
  const PairedProblem problem = [&] {
    try {
      return make_problem(ensemble.arms(), make_signal(n, seed), model, noise, wants_weights);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("quantize: ") + e.what());
    }
  }();
  const recovery::SpectralOptions options = spectral_options(config, seed);

  RecoverSummary summary;
  std::vector<recovery::Candidate> candidates;
  std::vector<recovery::RecoveryReport> reports;
  for (const InitKind kind : kinds) {
    try {
      reports.push_back(run_init(kind, problem, options));
    } catch (const NumericalError& e) {
      throw NumericalError("init " + recovery::to_string(kind) + ": " + e.what());
    }
    candidates.push_back({recovery::to_string(kind), reports.back().estimate});
  }
  std::size_t chosen = 0;
  if (candidates.size() > 1) {
    const auto& best = recovery::multi_init_select(candidates, *problem.stacked, problem.stacked_b);
    chosen = static_cast<std::size_t>(&best - candidates.data());
  }
  const recovery::RecoveryReport& init = reports[chosen];
  summary.init = candidates[chosen].name;
  summary.lambda_hat = init.lambda_hat;
  summary.init_iterations = init.iterations;
  summary.converged = init.converged;
  for (const auto& p : init.trace)
    summary.trace.add_row({"init", std::to_string(p.iteration), format_double(p.value), ""});

  ComplexVec estimate = init.estimate;
  auto record = [&](const recovery::RecoveryReport& r, const std::vector<double>& errors) {
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      summary.trace.add_row({"refine", std::to_string(r.trace[i].iteration),
                             format_double(r.trace[i].value), format_double(errors[i + 1])});
    }
    summary.refine_iterations = r.iterations;
    summary.converged = summary.converged && r.converged;
    estimate = r.estimate;
  };
  std::vector<double> errors;
  auto observer = [&](int, const ComplexVec& x) { errors.push_back(dist_sq(x, problem.x0)); };
  try {
    if (refine == Refine::kAltMin) {
      record(recovery::alt_min(*problem.stacked, problem.stacked_b, init.estimate,
                               altmin_options(config), observer),
             errors);
    } else if (refine == Refine::kResampled) {
      recovery::ResampledOptions ro;
      ro.epsilon = config.epsilon;
      ro.c_stages = config.c_stages;
      ro.init = kinds[chosen];
      ro.spectral = options;
      ro.ls.tol = config.ls_tol;
      record(recovery::alt_min_resampled(ensemble, problem.observed.b1, problem.observed.b2, ro,
                                         observer),
             errors);
    }
  } catch (const NumericalError& e) {
    throw NumericalError(std::string("refine: ") + e.what());
  }
  summary.dist_sq = dist_sq(estimate, problem.x0);
  summary.min_phase_distance = min_phase_distance(estimate, problem.x0);
  return summary;
}

void print_summary(std::ostream& os, const RecoverSummary& s) {
  os << "init: " << s.init << '\n'
     << "dist_sq: " << format_double(s.dist_sq) << '\n'
     << "min_phase_distance: " << format_double(s.min_phase_distance) << '\n'
     << "lambda_hat: " << format_double(s.lambda_hat) << '\n'
     << "init_iterations: " << s.init_iterations << '\n'
     << "refine_iterations: " << s.refine_iterations << '\n'
     << "converged: " << (s.converged ? "yes" : "no") << '\n';
}

CsvTable run_experiment(const ExperimentConfig& raw, std::ostream& console) {
  const ExperimentConfig config = with_defaults(raw);
  config.validate();
  CsvTable table({});
  switch (config.kind) {
    case ExperimentKind::kLambdaSweep: table = run_lambda_sweep(config); break;
    case ExperimentKind::kDistortionSweep: table = run_distortion_sweep(config); break;
    case ExperimentKind::kAltMinConvergence: table = run_altmin_convergence(config); break;
    case ExperimentKind::kCdpConvergence: table = run_cdp_convergence(config); break;
    case ExperimentKind::kRecover: {
      RecoverSummary summary = run_recover(config);
      print_summary(console, summary);
      table = std::move(summary.trace);
      break;
    }
  }
  if (config.out.empty()) {
    if (config.kind != ExperimentKind::kRecover) console << table.str();
  } else {
    table.write(config.out);
    write_manifest(manifest_path(config.out), config);
  }
  return table;
}

}  // namespace onebit::bench
