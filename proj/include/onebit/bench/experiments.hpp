#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "onebit/bench/config.hpp"
#include "onebit/bench/csv.hpp"
#include "onebit/numkit/complex_vec.hpp"
#include "onebit/recovery/report.hpp"
#include "onebit/recovery/spectral.hpp"

namespace onebit::bench {

recovery::ShiftPolicy parse_shift(std::string_view name);
recovery::SpectralOptions spectral_options(const ExperimentConfig& config, std::uint64_t seed);

/// Seed of trial t: derive_key(config.seed, kTrial, t).
std::uint64_t trial_seed(const ExperimentConfig& config, std::size_t trial);
/// Unit-norm complex Gaussian signal from (seed, kSignal).
ComplexVec make_signal(std::size_t n, std::uint64_t seed);

// lambda-sweep: model,param,lambda_estimate,std_error,closed_form
std::vector<std::string> default_lambda_grid();
CsvTable run_lambda_sweep(const ExperimentConfig& config);

// distortion-sweep: alpha,method,median_dist_sq,iqr,trials
struct DistortionTrial {
  ComplexVec one_bit_estimate;
  double one_bit_dist_sq = 0.0;
  double subexp_dist_sq = 0.0;
};
/// One trial at one distortion level. The ensemble, signal and clean
/// intensities depend only on (config.seed, trial), never on alpha. Without
/// `with_subexp` the SubExpPhase run is skipped and its error left at 0.
DistortionTrial distortion_trial(const ExperimentConfig& config, double alpha, std::size_t trial,
                                 bool with_subexp = true);
CsvTable run_distortion_sweep(const ExperimentConfig& config);

// altmin-convergence / cdp-convergence: init,iteration,median_dist_sq
enum class Sensing { kGaussian, kCodedDiffraction };

/// dist_sq after iterations 0..altmin_iters for every init in config.inits,
/// indexed [init][trial][iteration]. Runs that stop early repeat their final
/// value up to altmin_iters. Signals are scaled so every intensity has mean 1
/// (unit norm for Gaussian rows, norm sqrt(n) for coded diffraction), which
/// fixes the meaning of additive noise levels.
using ConvergenceCurves = std::vector<std::vector<std::vector<double>>>;
ConvergenceCurves convergence_curves(const ExperimentConfig& config, Sensing sensing);
CsvTable convergence_table(const ExperimentConfig& config, const ConvergenceCurves& curves);
CsvTable run_altmin_convergence(const ExperimentConfig& config);
CsvTable run_cdp_convergence(const ExperimentConfig& config);

// recover: stage,iteration,value,dist_sq
struct RecoverSummary {
  std::string init;
  double dist_sq = 1.0;
  double min_phase_distance = 0.0;
  double lambda_hat = 0.0;
  int init_iterations = 0;
  int refine_iterations = 0;
  bool converged = false;
  CsvTable trace{{"stage", "iteration", "value", "dist_sq"}};
};
RecoverSummary run_recover(const ExperimentConfig& config);
void print_summary(std::ostream& os, const RecoverSummary& summary);

/// Runs config.kind and writes the CSV to config.out (if set) plus its
/// manifest. Returns the CSV table.
CsvTable run_experiment(const ExperimentConfig& config, std::ostream& console);

}  // namespace onebit::bench
