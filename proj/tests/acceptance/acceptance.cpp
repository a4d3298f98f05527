// Acceptance suite: one check per criterion, one PASS/FAIL line each.
//   acceptance [--criterion N] [--bench PATH]
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "onebit/bench/config.hpp"
#include "onebit/bench/experiments.hpp"
#include "onebit/bench/trials.hpp"
#include "onebit/channels/lambda.hpp"
#include "onebit/channels/quantize.hpp"
#include "onebit/numkit/dense.hpp"
#include "onebit/recovery/altmin.hpp"
#include "onebit/recovery/spectral.hpp"
#include "onebit/rng.hpp"
#include "onebit/sensing/cdp.hpp"
#include "onebit/sensing/ensemble.hpp"
#include "onebit/sensing/samplers.hpp"
#include "support/oracles.hpp"

namespace {

using namespace onebit;
using bench::ExperimentConfig;
using bench::ExperimentKind;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// ------------------------------------------------------------------ 1

Outcome lambda_oracles() {
  std::ostringstream d;
  bool pass = true;
  const auto id = channels::lambda_monte_carlo(channels::Identity{}, 1000000, 101);
  pass &= id.estimate >= 0.99 && id.estimate <= 1.01;
  d << "identity " << fmt(id.estimate);
  for (const double sigma : {0.25, 1.0, 4.0}) {
    const channels::ExponentialNoise model{sigma};
    const auto e = channels::lambda_monte_carlo(model, 1000000, 102);
    const double closed = (1.0 + 2.0 * std::sqrt(sigma)) / std::pow(1.0 + std::sqrt(sigma), 2);
    const double z = std::abs(e.estimate - closed) / e.std_error;
    pass &= z <= 3.0;
    d << "; expnoise " << sigma << ": " << fmt(e.estimate) << " vs " << fmt(closed) << " (" << fmt(z)
      << " se)";
  }
  return {pass, d.str()};
}

// ------------------------------------------------------------------ 2

Outcome distribution_lemmas() {
  const std::size_t samples = 100000;
  const ComplexVec x0 = testing::random_unit(8, 201);
  std::vector<double> intensity;
  Stream rng(202, Purpose::kTrial);
  for (std::size_t i = 0; i < samples; ++i)
    intensity.push_back(sensing::intensity(sensing::sample_complex_gaussian(8, rng), x0));
  const double ks_exp = testing::ks_statistic(intensity, [](double t) { return 1.0 - std::exp(-t); });

  const auto e = sensing::build_paired_ensemble(8, samples, 203);
  const auto b1 = sensing::intensities(e.rows1(), x0);
  const auto b2 = sensing::intensities(e.rows2(), x0);
  std::vector<double> ratio;
  for (std::size_t i = 0; i < samples; ++i) ratio.push_back(channels::ratio_weights(b1[i], b2[i]).r1);
  const double ks_unif = testing::ks_statistic(ratio, [](double t) { return std::clamp(t, 0.0, 1.0); });
  return {ks_exp <= 0.01 && ks_unif <= 0.01,
          "KS exp " + fmt(ks_exp) + ", KS uniform ratio " + fmt(ks_unif) + " (limit 0.01)"};
}

// --------------------------------------------------------------- 3, 4

// Empirical one-bit and weighted matrices at n = 4 over 1e6 fresh pairs.
struct Empirical {
  ComplexVec x0;
  HermitianDense one_bit;
  HermitianDense weighted;
};

Empirical empirical_matrices(std::uint64_t seed) {
  const std::size_t n = 4;
  const std::size_t pairs = 1000000;
  Empirical e{testing::random_unit(n, seed), HermitianDense::zeros(n), HermitianDense::zeros(n)};
  Stream rng(seed, Purpose::kEnsemble);
  for (std::size_t i = 0; i < pairs; ++i) {
    const ComplexVec a1 = sensing::sample_complex_gaussian(n, rng);
    const ComplexVec a2 = sensing::sample_complex_gaussian(n, rng);
    const double b1 = sensing::intensity(a1, e.x0);
    const double b2 = sensing::intensity(a2, e.x0);
    const int y = channels::quantize(b1, b2);
    const auto w = channels::ratio_weights(b1, b2);
    e.one_bit.add_rank_one(y, a1.span());
    e.one_bit.add_rank_one(-y, a2.span());
    e.weighted.add_rank_one(y * w.r1, a1.span());
    e.weighted.add_rank_one(-y * w.r2, a2.span());
  }
  e.one_bit.scale(1.0 / pairs);
  e.weighted.scale(1.0 / pairs);
  return e;
}

const Empirical& shared_empirical() {
  static const Empirical e = empirical_matrices(301);
  return e;
}

Outcome expectation_identities() {
  const Empirical& e = shared_empirical();
  const double lambda = 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(e.one_bit(i, j) - lambda * e.x0[i] * std::conj(e.x0[j])));
  double worst_w = 0.0;
  for (std::uint64_t k = 0; k < 5; ++k) {
    const ComplexVec x = testing::random_unit(4, 310 + k);
    const double predicted = 0.5 * std::norm(inner(e.x0, x)) + 0.5;
    worst_w = std::max(worst_w, std::abs(e.weighted.quadratic_form(x) - predicted));
  }
  return {worst <= 0.02 && worst_w <= 0.02,
          "max |C - x0x0*| " + fmt(worst) + ", max weighted quadratic-form gap " + fmt(worst_w) +
              " (limit 0.02)"};
}

Outcome excess_risk() {
  const Empirical& e = shared_empirical();
  const double lambda = 1.0;
  double worst = 0.0;
  double worst_w = 0.0;
  for (std::uint64_t k = 0; k < 5; ++k) {
    const ComplexVec x = testing::random_unit(4, 410 + k);
    const double frob = 2.0 * (1.0 - std::norm(inner(e.x0, x)));  // ||xx* - x0x0*||_F^2
    const double gap = e.one_bit.quadratic_form(e.x0) - e.one_bit.quadratic_form(x);
    const double gap_w = e.weighted.quadratic_form(e.x0) - e.weighted.quadratic_form(x);
    worst = std::max(worst, std::abs(gap - 0.5 * lambda * frob));
    worst_w = std::max(worst_w, std::abs(gap_w - 0.25 * frob));
  }
  return {worst <= 0.02 && worst_w <= 0.02,
          "max one-bit gap error " + fmt(worst) + ", max weighted gap error " + fmt(worst_w) +
              " (limit 0.02)"};
}

// ------------------------------------------------------------------ 5

Outcome oracle_equivalence() {
  const std::size_t n = 8;
  const std::size_t m = 200;
  const recovery::SpectralOptions opts{.tol = 1e-12, .max_iters = 1000000};
  double worst[3] = {0, 0, 0};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto e = sensing::build_paired_ensemble(n, m, 500 + seed);
    const ComplexVec x0 = testing::random_unit(n, 520 + seed);
    Stream rng(seed, Purpose::kNoise);
    const auto data = channels::quantize_signal(e, x0, channels::Identity{}, rng, true);
    const channels::QuantizedData plain{data.arms, data.y, std::nullopt};
    auto o = recovery::SpectralOptions(opts);
    o.seed = seed;

    const auto c = dense_top_eigenvector(testing::assemble_one_bit(e, data.y));
    worst[0] = std::max(worst[0], dist_sq(recovery::one_bit_phase(plain, o).estimate, c.eigvec));
    const auto cw = dense_top_eigenvector(testing::assemble_one_bit(e, data.y, &*data.weights));
    worst[1] = std::max(worst[1], dist_sq(recovery::weighted_one_bit_phase(data, o).estimate, cw.eigvec));
    const auto plain_e = sensing::build_plain_ensemble(n, m, 540 + seed);
    const auto b = sensing::intensities(plain_e.rows(), x0);
    const auto cs = dense_top_eigenvector(testing::assemble_subexp(plain_e.rows(), b));
    worst[2] = std::max(worst[2], dist_sq(recovery::subexp_phase(plain_e, b, o).estimate, cs.eigvec));
  }
  const bool pass = worst[0] <= 1e-8 && worst[1] <= 1e-8 && worst[2] <= 1e-8;
  return {pass, "worst dist_sq to oracle: one-bit " + fmt(worst[0]) + ", weighted " + fmt(worst[1]) +
                    ", subexp " + fmt(worst[2]) + " (limit 1e-8, 20 seeds)"};
}

// ------------------------------------------------------------------ 6

double median_one_bit_error(std::size_t n, std::size_t m, std::uint64_t base) {
  std::vector<double> errors;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto e = sensing::build_paired_ensemble(n, m, base + seed);
    const ComplexVec x0 = testing::random_unit(n, base + 1000 + seed);
    Stream rng(seed, Purpose::kNoise);
    const auto data = channels::quantize_signal(e, x0, channels::Identity{}, rng, false);
    errors.push_back(dist_sq(recovery::one_bit_phase(data, {.seed = seed}).estimate, x0));
  }
  return bench::median(errors);
}

Outcome sample_complexity() {
  const double small = median_one_bit_error(32, 1000, 600);
  const double large = median_one_bit_error(32, 4000, 700);
  const double ratio = small / large;
  return {ratio >= 2.5 && ratio <= 6.0, "median dist_sq m=1000: " + fmt(small) + ", m=4000: " +
                                            fmt(large) + ", ratio " + fmt(ratio) + " (band [2.5, 6])"};
}

// ------------------------------------------------------------------ 7

Outcome distortion_robustness() {
  ExperimentConfig c = bench::with_defaults(
      {.kind = ExperimentKind::kDistortionSweep, .n = 64, .ratio = 64, .trials = 20, .seed = 7});
  std::vector<double> one_bit;
  std::vector<double> subexp;
  std::vector<ComplexVec> estimates;
  for (std::size_t t = 0; t < 20; ++t) {
    const auto r = bench::distortion_trial(c, 8.0, t);
    one_bit.push_back(r.one_bit_dist_sq);
    subexp.push_back(r.subexp_dist_sq);
    estimates.push_back(r.one_bit_estimate);
  }
  const double mo = bench::median(one_bit);
  const double ms = bench::median(subexp);
  bool identical = true;
  for (const double alpha : {0.01, 0.5, 1.0, 2.0, 4.0}) {
    for (std::size_t t = 0; t < 3; ++t)
      identical = identical && bench::distortion_trial(c, alpha, t, false).one_bit_estimate == estimates[t];
  }
  return {mo <= 0.1 && ms >= 3.0 * mo && identical,
          "alpha=8 median 1bitPhase " + fmt(mo) + ", SubExpPhase " + fmt(ms) + " (ratio " + fmt(ms / mo) +
              "); 1bitPhase bit-identical across alpha: " + (identical ? "yes" : "no")};
}

// ------------------------------------------------------------------ 8

Outcome altmin_convergence() {
  ExperimentConfig c = bench::with_defaults(
      {.kind = ExperimentKind::kCdpConvergence, .n = 512, .ratio = 4, .trials = 20, .seed = 8});
  c.validate();
  const auto clean = bench::convergence_curves(c, bench::Sensing::kCodedDiffraction);
  std::ostringstream d;
  bool pass = true;
  d << "noiseless reached 1e-6 within 100 its:";
  for (std::size_t k = 0; k < c.inits.size(); ++k) {
    int hits = 0;
    for (const auto& curve : clean[k]) hits += curve.back() <= 1e-6;
    pass &= hits >= 18;
    d << ' ' << c.inits[k] << ' ' << hits << "/20";
  }
  c.model = "clipgauss:sigma=0.8";
  const auto noisy = bench::convergence_curves(c, bench::Sensing::kCodedDiffraction);
  std::vector<double> finals(c.inits.size());
  d << "; sigma=0.8 median final:";
  for (std::size_t k = 0; k < c.inits.size(); ++k) {
    std::vector<double> last;
    for (const auto& curve : noisy[k]) last.push_back(curve.back());
    finals[k] = bench::median(last);
    d << ' ' << c.inits[k] << ' ' << fmt(finals[k]);
  }
  // inits: random, subexp, onebit, weighted1bit
  pass &= finals[2] <= finals[1] && finals[3] <= finals[1];
  return {pass, d.str()};
}

// ------------------------------------------------------------------ 9

Outcome altmin_monotone() {
  int runs = 0;
  int increases = 0;
  double worst = 0.0;
  auto check = [&](const recovery::RecoveryReport& r) {
    ++runs;
    for (std::size_t k = 1; k < r.trace.size(); ++k) {
      const double rise = r.trace[k].value - r.trace[k - 1].value;
      if (rise > 0.0) {
        worst = std::max(worst, rise / r.trace[k - 1].value);
        // Rounding slack: the objective is a sum of O(m) terms in double precision.
        if (rise > 1e-12 * r.trace[k - 1].value) ++increases;
      }
    }
  };
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto e = sensing::build_paired_ensemble(32, 96, 900 + seed);
    const ComplexVec x0 = testing::random_unit(32, 920 + seed);
    const OperatorPtr op = e.arms().stacked();
    std::vector<double> b = sensing::intensities(*op, x0);
    Stream rng(seed, Purpose::kNoise);
    std::vector<double> noisy = b;
    for (double& v : noisy) v = channels::apply_model(channels::ClippedGaussianNoise{0.8}, v, rng);
    check(recovery::alt_min(*op, b, testing::random_unit(32, seed), {.max_iters = 200}));
    check(recovery::alt_min(*op, noisy, testing::random_unit(32, seed), {.max_iters = 200}));

    const auto cdp = sensing::build_cdp_pair(64, 4, 940 + seed).stacked();
    const ComplexVec z0 = testing::random_unit(64, 960 + seed);
    check(recovery::alt_min(*cdp, sensing::intensities(*cdp, z0), testing::random_unit(64, seed),
                            {.max_iters = 200}));
  }
  return {increases == 0, std::to_string(runs) + " runs, " + std::to_string(increases) +
                              " increases beyond 1e-12 relative; largest relative rise " + fmt(worst)};
}

// ----------------------------------------------------------------- 10

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome reproducibility(const std::string& bench_path) {
  const auto dir = std::filesystem::temp_directory_path() / "onebit_acceptance_replay";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> runs{
      {"lambda", "lambda-sweep --samples 50000 --seed 11"},
      {"distortion", "distortion-sweep --n 16 --ratio 32 --alphas 0.5,2,8 --trials 4 --seed 12"},
      {"recover", "recover --n 32 --m 2000 --refine altmin --seed 13"},
      {"resampled", "recover --n 16 --m 1200 --refine resampled --init onebit,subexp --seed 14"},
      {"altmin", "altmin-convergence --n 32 --ratio 4 --trials 3 --altmin-iters 30 --seed 15"},
      {"cdp", "cdp-convergence --n 64 --ratio 4 --trials 3 --model clipgauss:sigma=0.8 --seed 16"},
  };
  int same = 0;
  std::string failures;
  for (const auto& [name, args] : runs) {
    const auto first = dir / (name + ".csv");
    const auto second = dir / (name + ".replay.csv");
    bool ok;
    if (!bench_path.empty()) {
      const std::string run = bench_path + " " + args + " --out " + first.string() + " > /dev/null";
      const std::string replay = bench_path + " replay --manifest " +
                                 bench::manifest_path(first).string() + " --out " + second.string() +
                                 " > /dev/null";
      ok = std::system(run.c_str()) == 0 && std::system(replay.c_str()) == 0;
    } else {
      failures += " (no --bench given)";
      ok = false;
    }
    ok = ok && !slurp(first).empty() && slurp(first) == slurp(second);
    same += ok;
    if (!ok) failures += " " + name;
  }
  return {same == static_cast<int>(runs.size()),
          std::to_string(same) + "/" + std::to_string(runs.size()) +
              " CLI runs byte-identical on replay" + (failures.empty() ? "" : ";" + failures)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  std::string bench_path;
  app.add_option("--criterion", only, "Run a single criterion (1-10)");
  app.add_option("--bench", bench_path, "Path to the onebit_bench executable");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"lambda oracle agreement", lambda_oracles},
      {"distribution lemmas (KS)", distribution_lemmas},
      {"expectation / rank-one identities", expectation_identities},
      {"excess-risk identities", excess_risk},
      {"dense-oracle equivalence", oracle_equivalence},
      {"sample-complexity scaling", sample_complexity},
      {"distortion robustness", distortion_robustness},
      {"AltMin convergence", altmin_convergence},
      {"AltMin monotonicity", altmin_monotone},
      {"CLI reproducibility", [&] { return reproducibility(bench_path); }},
  };
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "criterion must be in 1.." << criteria.size() << '\n';
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " -- " << o.detail << " [" << fmt(secs) << " s]" << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
