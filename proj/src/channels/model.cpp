#include "onebit/channels/model.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "onebit/errors.hpp"

namespace onebit::channels {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int sign_of(double d) { return (d > 0.0) - (d < 0.0); }

double parse_number(std::string_view text, std::string_view spec) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw ConfigError("invalid model spec '" + std::string(spec) + "': bad number");
  }
  return value;
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

void validate(const MeasurementModel& model) {
  std::visit(Overloaded{
                 [](const Identity&) {},
                 [](const TanhDistortion& m) {
                   if (!(m.alpha > 0.0) || !std::isfinite(m.alpha))
                     throw ConfigError("tanh: alpha must be > 0");
                 },
                 [](const ExponentialNoise& m) {
                   if (!(m.sigma >= 0.0) || !std::isfinite(m.sigma))
                     throw ConfigError("expnoise: sigma must be >= 0");
                 },
                 [](const PoissonNoise& m) {
                   if (!(m.eta > 0.0) || !std::isfinite(m.eta))
                     throw ConfigError("poisson: eta must be > 0");
                 },
                 [](const ClippedGaussianNoise& m) {
                   if (!(m.sigma >= 0.0) || !std::isfinite(m.sigma))
                     throw ConfigError("clipgauss: sigma must be >= 0");
                 },
             },
             model);
}

MeasurementModel parse_model(std::string_view spec) {
  if (spec == "identity") return Identity{};
  const auto colon = spec.find(':');
  const auto eq = spec.find('=');
  if (colon == std::string_view::npos || eq == std::string_view::npos || eq < colon) {
    throw ConfigError("invalid model spec '" + std::string(spec) +
                      "' (expected identity | tanh:alpha=F | expnoise:sigma=F | "
                      "poisson:eta=F | clipgauss:sigma=F)");
  }
  const auto family = spec.substr(0, colon);
  const auto key = spec.substr(colon + 1, eq - colon - 1);
  const double value = parse_number(spec.substr(eq + 1), spec);

  MeasurementModel model;
  if (family == "tanh" && key == "alpha") {
    model = TanhDistortion{value};
  } else if (family == "expnoise" && key == "sigma") {
    model = ExponentialNoise{value};
  } else if (family == "poisson" && key == "eta") {
    model = PoissonNoise{value};
  } else if (family == "clipgauss" && key == "sigma") {
    model = ClippedGaussianNoise{value};
  } else {
    throw ConfigError("invalid model spec '" + std::string(spec) + "': unknown family or key");
  }
  validate(model);
  return model;
}

std::string to_spec(const MeasurementModel& model) {
  return std::visit(
      Overloaded{
          [](const Identity&) { return std::string("identity"); },
          [](const TanhDistortion& m) { return "tanh:alpha=" + format_number(m.alpha); },
          [](const ExponentialNoise& m) { return "expnoise:sigma=" + format_number(m.sigma); },
          [](const PoissonNoise& m) { return "poisson:eta=" + format_number(m.eta); },
          [](const ClippedGaussianNoise& m) { return "clipgauss:sigma=" + format_number(m.sigma); },
      },
      model);
}

std::string family_name(const MeasurementModel& model) {
  static constexpr const char* kNames[] = {"identity", "tanh", "expnoise", "poisson", "clipgauss"};
  return kNames[model.index()];
}

double parameter_of(const MeasurementModel& model) {
  return std::visit(Overloaded{
                        [](const Identity&) { return 0.0; },
                        [](const TanhDistortion& m) { return m.alpha; },
                        [](const ExponentialNoise& m) { return m.sigma; },
                        [](const PoissonNoise& m) { return m.eta; },
                        [](const ClippedGaussianNoise& m) { return m.sigma; },
                    },
                    model);
}

bool is_identity(const MeasurementModel& model) {
  return std::holds_alternative<Identity>(model);
}

double apply_model(const MeasurementModel& model, double z, Stream& rng) {
  if (!(z >= 0.0)) throw ConfigError("apply_model: intensity must be >= 0");
  return std::visit(
      Overloaded{
          [z](const Identity&) { return z; },
          [z](const TanhDistortion& m) { return std::tanh(m.alpha * z); },
          [z, &rng](const ExponentialNoise& m) {
            return m.sigma == 0.0 ? z : z + rng.exponential(std::sqrt(m.sigma));
          },
          [z, &rng](const PoissonNoise& m) { return static_cast<double>(rng.poisson(z / m.eta)); },
          [z, &rng](const ClippedGaussianNoise& m) {
            return z + m.sigma * std::max(rng.standard_normal(), 0.0);
          },
      },
      model);
}

int perturbed_sign(const MeasurementModel& model, double b1, double b2, Stream& rng) {
  if (const auto* tanh_model = std::get_if<TanhDistortion>(&model)) {
    if (!(b1 >= 0.0) || !(b2 >= 0.0)) throw ConfigError("perturbed_sign: intensity must be >= 0");
    // cosh(u) cosh(v) > 0, so only the numerator decides the sign.
    return sign_of(std::sinh(tanh_model->alpha * (b1 - b2)));
  }
  const double v1 = apply_model(model, b1, rng);
  const double v2 = apply_model(model, b2, rng);
  return sign_of(v1 - v2);
}

}  // namespace onebit::channels
