#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include <gtest/gtest.h>

#include "onebit/channels/lambda.hpp"
#include "onebit/channels/model.hpp"
#include "onebit/channels/quantize.hpp"
#include "onebit/errors.hpp"
#include "onebit/rng.hpp"
#include "onebit/sensing/ensemble.hpp"
#include "support/oracles.hpp"

namespace onebit::channels {
namespace {

// lambda for ExponentialNoise by quadrature: with D = E1 - E2 ~ Laplace(1)
// and N = nu1 - nu2 ~ Laplace(s), lambda = E[D (2 F_N(D) - 1)].
double lambda_expnoise_quadrature(double sigma) {
  const double s = std::sqrt(sigma);
  auto laplace_cdf = [s](double t) { return t < 0 ? 0.5 * std::exp(t / s) : 1.0 - 0.5 * std::exp(-t / s); };
  // Integrand is even; integrate 2 * int_0^inf d (2F(d) - 1) 0.5 e^{-d} dd by Simpson.
  const int steps = 200000;
  const double upper = 60.0;
  const double h = upper / steps;
  double acc = 0.0;
  for (int k = 0; k <= steps; ++k) {
    const double d = k * h;
    const double f = d * (2.0 * laplace_cdf(d) - 1.0) * std::exp(-d);
    acc += f * (k == 0 || k == steps ? 1.0 : (k % 2 ? 4.0 : 2.0));
  }
  return acc * h / 3.0;
}

TEST(Model, ParseAndPrint) {
  EXPECT_TRUE(is_identity(parse_model("identity")));
  EXPECT_EQ(std::get<TanhDistortion>(parse_model("tanh:alpha=2.5")).alpha, 2.5);
  EXPECT_EQ(std::get<ExponentialNoise>(parse_model("expnoise:sigma=1")).sigma, 1.0);
  EXPECT_EQ(std::get<PoissonNoise>(parse_model("poisson:eta=0.5")).eta, 0.5);
  EXPECT_EQ(std::get<ClippedGaussianNoise>(parse_model("clipgauss:sigma=0.8")).sigma, 0.8);
  for (const char* spec : {"identity", "tanh:alpha=0.1", "expnoise:sigma=4", "poisson:eta=2",
                           "clipgauss:sigma=0.4"}) {
    EXPECT_EQ(to_spec(parse_model(spec)), spec);
  }
  EXPECT_EQ(family_name(parse_model("poisson:eta=2")), "poisson");
  EXPECT_EQ(parameter_of(parse_model("tanh:alpha=3")), 3.0);
}

TEST(Model, RejectsBadSpecs) {
  for (const char* spec : {"", "gauss", "tanh", "tanh:alpha=", "tanh:alpha=x", "tanh:beta=1",
                           "tanh:alpha=0", "tanh:alpha=-1", "expnoise:sigma=-1", "poisson:eta=0",
                           "clipgauss:sigma=-0.1", "identity:x=1", "tanh:alpha=1e999"}) {
    EXPECT_THROW(parse_model(spec), ConfigError) << spec;
  }
}

TEST(ApplyModel, Examples) {
  Stream rng(1, Purpose::kNoise);
  EXPECT_EQ(apply_model(Identity{}, 3.0, rng), 3.0);
  EXPECT_EQ(apply_model(TanhDistortion{1.0}, 0.0, rng), 0.0);
  EXPECT_EQ(apply_model(ExponentialNoise{0.0}, 2.0, rng), 2.0);
  EXPECT_THROW(apply_model(Identity{}, -1.0, rng), ConfigError);
}

TEST(ApplyModel, ExponentialNoiseMean) {
  for (const double sigma : {0.25, 4.0}) {
    Stream rng(2, Purpose::kNoise);
    double sum = 0.0;
    const int draws = 1000000;
    for (int i = 0; i < draws; ++i) sum += apply_model(ExponentialNoise{sigma}, 0.0, rng);
    EXPECT_NEAR(sum / draws, std::sqrt(sigma), 0.01 * std::sqrt(sigma));
  }
}

TEST(ApplyModel, ClippedGaussianNonNegativeShift) {
  Stream rng(3, Purpose::kNoise);
  for (int i = 0; i < 1000; ++i) EXPECT_GE(apply_model(ClippedGaussianNoise{0.8}, 1.5, rng), 1.5);
}

TEST(Quantize, Examples) {
  EXPECT_EQ(quantize(2.0, 1.0), 1);
  EXPECT_EQ(quantize(1.0, 2.0), -1);
  EXPECT_EQ(quantize(1.0, 1.0), 0);
}

TEST(Quantize, InvariantUnderIncreasingMaps) {
  Stream rng(4, Purpose::kTrial);
  for (int i = 0; i < 10000; ++i) {
    const double b1 = rng.exponential(1.0);
    const double b2 = rng.exponential(1.0);
    EXPECT_EQ(quantize(std::tanh(b1), std::tanh(b2)), quantize(b1, b2));
    EXPECT_EQ(quantize(std::log1p(b1), std::log1p(b2)), quantize(b1, b2));
    // Exact comparator agrees even where tanh saturates.
    for (const double alpha : {0.5, 8.0, 64.0})
      EXPECT_EQ(perturbed_sign(TanhDistortion{alpha}, b1, b2, rng), quantize(b1, b2));
  }
}

TEST(RatioWeights, Examples) {
  const RatioWeights a = ratio_weights(1.0, 1.0);
  EXPECT_EQ(a.r1, 0.5);
  EXPECT_EQ(a.r2, 0.5);
  const RatioWeights b = ratio_weights(3.0, 1.0);
  EXPECT_EQ(b.r1, 0.75);
  EXPECT_EQ(b.r2, 0.25);
  EXPECT_THROW(ratio_weights(0.0, 0.0), ConfigError);
}

TEST(RatioWeights, UniformOverExponentials) {
  Stream rng(5, Purpose::kTrial);
  std::vector<double> r1;
  for (int i = 0; i < 100000; ++i) r1.push_back(ratio_weights(rng.exponential(1.0), rng.exponential(1.0)).r1);
  EXPECT_LE(testing::ks_statistic(r1, [](double t) { return std::clamp(t, 0.0, 1.0); }), 0.01);
}

sensing::PairedEnsemble tiny_ensemble() {
  auto r1 = std::make_shared<const sensing::DenseRows>(1, 2, std::vector<Complex>{2.0, 0.0});
  auto r2 = std::make_shared<const sensing::DenseRows>(1, 2, std::vector<Complex>{1.0, 0.0});
  return {2, 1, 0, r1, r2};
}

TEST(QuantizeSignal, Examples) {
  Stream rng(6, Purpose::kNoise);
  const QuantizedData d = quantize_signal(tiny_ensemble(), ComplexVec::basis(2, 0), Identity{}, rng, true);
  ASSERT_EQ(d.y.size(), 1u);
  EXPECT_EQ(d.y[0], 1);
  EXPECT_EQ((*d.weights)[0].r1, 0.8);
  EXPECT_NO_THROW(d.validate());
  EXPECT_THROW(quantize_signal(tiny_ensemble(), ComplexVec::zeros(2), Identity{}, rng, false), ConfigError);
}

TEST(QuantizeSignal, ScaleInvariant) {
  const auto e = sensing::build_paired_ensemble(6, 500, 3);
  const ComplexVec x0 = testing::random_vec(6, 1);
  Stream a(1, Purpose::kNoise);
  Stream b(1, Purpose::kNoise);
  EXPECT_EQ(quantize_signal(e, x0, Identity{}, a, false).y,
            quantize_signal(e, Complex(5.0) * x0, Identity{}, b, false).y);
}

TEST(QuantizeSignal, NoTiesUnderIdentity) {
  const auto e = sensing::build_paired_ensemble(4, 100000, 4);
  Stream rng(1, Purpose::kNoise);
  const QuantizedData d = quantize_signal(e, testing::random_unit(4, 2), Identity{}, rng, false);
  EXPECT_EQ(std::count(d.y.begin(), d.y.end(), 0), 0);
}

TEST(QuantizeSignal, WeightsRequireIdentity) {
  const auto e = sensing::build_paired_ensemble(4, 10, 4);
  Stream rng(1, Purpose::kNoise);
  const ComplexVec x0 = testing::random_unit(4, 2);
  for (const char* spec : {"tanh:alpha=1", "expnoise:sigma=1", "poisson:eta=1", "clipgauss:sigma=0.4"}) {
    EXPECT_THROW(quantize_signal(e, x0, parse_model(spec), rng, true), ConfigError) << spec;
  }
}

TEST(QuantizeObserved, DropsZeroSumPairs) {
  const auto arms = tiny_ensemble().arms();
  const std::vector<double> zero{0.0};
  const QuantizedData d = quantize_observed(arms, zero, zero, true);
  EXPECT_EQ(d.y[0], 0);
  EXPECT_NO_THROW(d.validate());
}

TEST(ObservePairs, LabelsMatchQuantizeArms) {
  const auto e = sensing::build_paired_ensemble(5, 2000, 9);
  const ComplexVec x0 = testing::random_unit(5, 3);
  for (const char* spec : {"identity", "tanh:alpha=8", "expnoise:sigma=1", "poisson:eta=1",
                           "clipgauss:sigma=0.8"}) {
    Stream a(7, Purpose::kNoise);
    Stream b(7, Purpose::kNoise);
    const auto model = parse_model(spec);
    const ObservedPairs o = observe_pairs(e.arms(), x0, model, a, false);
    EXPECT_EQ(o.labels.y, quantize_arms(e.arms(), x0, model, b, false).y) << spec;
    EXPECT_EQ(o.b1.size(), 2000u);
  }
}

TEST(Lambda, ClosedForms) {
  EXPECT_EQ(lambda_closed_form(Identity{}), 1.0);
  EXPECT_EQ(lambda_closed_form(ExponentialNoise{0.0}), 1.0);
  EXPECT_DOUBLE_EQ(*lambda_closed_form(ExponentialNoise{1.0}), 0.75);
  EXPECT_FALSE(lambda_closed_form(TanhDistortion{1.0}));
  EXPECT_FALSE(lambda_closed_form(PoissonNoise{1.0}));
  EXPECT_FALSE(lambda_closed_form(ClippedGaussianNoise{1.0}));
}

TEST(Lambda, ClosedFormMatchesQuadrature) {
  for (const double sigma : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    EXPECT_NEAR(*lambda_closed_form(ExponentialNoise{sigma}), lambda_expnoise_quadrature(sigma), 1e-8)
        << sigma;
  }
}

TEST(Lambda, MonteCarloIdentity) {
  const LambdaEstimate e = lambda_monte_carlo(Identity{}, 1000000, 1);
  EXPECT_NEAR(e.estimate, 1.0, 0.01);
  EXPECT_GT(e.std_error, 0.0);
  EXPECT_THROW(lambda_monte_carlo(Identity{}, 999, 1), ConfigError);
}

TEST(Lambda, MonteCarloMatchesClosedForm) {
  for (const double sigma : {0.25, 1.0, 4.0}) {
    const LambdaEstimate e = lambda_monte_carlo(ExponentialNoise{sigma}, 1000000, 2);
    EXPECT_NEAR(e.estimate, *lambda_closed_form(ExponentialNoise{sigma}), 3.0 * e.std_error) << sigma;
  }
}

TEST(Lambda, Deterministic) {
  const LambdaEstimate a = lambda_monte_carlo(PoissonNoise{1.0}, 100000, 3);
  const LambdaEstimate b = lambda_monte_carlo(PoissonNoise{1.0}, 100000, 3);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(Lambda, TanhIsNonIncreasingInAlpha) {
  double previous = 2.0;
  double previous_se = 0.0;
  for (const double alpha : {0.5, 1.0, 2.0, 4.0}) {
    const LambdaEstimate e = lambda_monte_carlo(TanhDistortion{alpha}, 1000000, 4);
    EXPECT_LE(e.estimate, previous + 2.0 * std::hypot(e.std_error, previous_se)) << alpha;
    previous = e.estimate;
    previous_se = e.std_error;
  }
}

TEST(Lambda, PoissonDecreasesInEta) {
  double previous = 2.0;
  double previous_se = 0.0;
  for (const double eta : {0.5, 1.0, 2.0, 4.0}) {
    const LambdaEstimate e = lambda_monte_carlo(PoissonNoise{eta}, 1000000, 5);
    EXPECT_LT(e.estimate + 2.0 * std::hypot(e.std_error, previous_se), previous) << eta;
    previous = e.estimate;
    previous_se = e.std_error;
  }
}

TEST(Lambda, WithinUnitInterval) {
  for (const char* spec : {"identity", "tanh:alpha=0.5", "tanh:alpha=8", "expnoise:sigma=4",
                           "poisson:eta=4", "clipgauss:sigma=0.8"}) {
    const LambdaEstimate e = lambda_monte_carlo(parse_model(spec), 200000, 6);
    EXPECT_GT(e.estimate, 0.0) << spec;
    EXPECT_LE(e.estimate, 1.0 + 3.0 * e.std_error) << spec;
  }
}

}  // namespace
}  // namespace onebit::channels
