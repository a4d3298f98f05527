#include "onebit/bench/config.hpp"

#include <cmath>
#include <fstream>

#include "onebit/channels/model.hpp"
#include "onebit/errors.hpp"
#include "onebit/recovery/report.hpp"

namespace onebit::bench {
namespace {

struct KindName {
  ExperimentKind kind;
  std::string_view name;
};
constexpr KindName kKindNames[] = {
    {ExperimentKind::kLambdaSweep, "lambda-sweep"},
    {ExperimentKind::kDistortionSweep, "distortion-sweep"},
    {ExperimentKind::kRecover, "recover"},
    {ExperimentKind::kAltMinConvergence, "altmin-convergence"},
    {ExperimentKind::kCdpConvergence, "cdp-convergence"},
};

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return std::string(name);
  }
  throw ConfigError("unknown experiment kind");
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  for (const auto& [k, known] : kKindNames) {
    if (known == name) return k;
  }
  throw ConfigError("unknown experiment kind '" + std::string(name) + "'");
}

std::string to_string(Refine refine) {
  switch (refine) {
    case Refine::kNone: return "none";
    case Refine::kAltMin: return "altmin";
    case Refine::kResampled: return "resampled";
  }
  throw ConfigError("unknown refine mode");
}

Refine parse_refine(std::string_view name) {
  if (name == "none") return Refine::kNone;
  if (name == "altmin") return Refine::kAltMin;
  if (name == "resampled") return Refine::kResampled;
  throw ConfigError("unknown refine mode '" + std::string(name) +
                    "' (expected altmin | resampled | none)");
}

std::size_t ExperimentConfig::pairs() const {
  if (m > 0) return m;
  return static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));
}

void ExperimentConfig::validate() const {
  if (n == 0) throw ConfigError("n must be >= 1");
  if (kind != ExperimentKind::kLambdaSweep && pairs() == 0)
    throw ConfigError("m (or ratio * n) must be >= 1");
  if (!(ratio >= 0.0) || !std::isfinite(ratio)) throw ConfigError("ratio must be >= 0");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
  if (!(c_stages > 0.0)) throw ConfigError("c_stages must be > 0");
  if (!(tol > 0.0) || !(altmin_tol > 0.0) || !(ls_tol > 0.0))
    throw ConfigError("tolerances must be > 0");
  if (max_iters < 1 || altmin_iters < 1) throw ConfigError("iteration limits must be >= 1");
  if (samples < 1000) throw ConfigError("samples must be >= 1000");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  channels::validate(channels::parse_model(model));
  for (const auto& spec : models) channels::validate(channels::parse_model(spec));
  for (const double a : alphas) {
    if (!(a > 0.0)) throw ConfigError("alpha values must be > 0");
  }
  for (const auto& init : inits) recovery::parse_init_kind(init);
  parse_refine(refine);
  if (shift != "on" && shift != "off" && shift != "auto" && shift != "bound")
    throw ConfigError("unknown shift '" + shift + "' (expected on | off | auto | bound)");
}

ExperimentConfig with_defaults(ExperimentConfig c) {
  auto fill = [](auto& field, auto value) {
    if (field == decltype(value){}) field = value;
  };
  switch (c.kind) {
    case ExperimentKind::kLambdaSweep:
      fill(c.n, std::size_t{1});
      break;
    case ExperimentKind::kDistortionSweep:
      fill(c.n, std::size_t{128});
      if (c.m == 0) fill(c.ratio, 64.0);
      if (c.alphas.empty()) c.alphas = {0.01, 0.5, 1.0, 2.0, 4.0, 8.0};
      fill(c.altmin_iters, 1);
      break;
    case ExperimentKind::kRecover:
      fill(c.n, std::size_t{32});
      if (c.m == 0) fill(c.ratio, 125.0);
      if (c.inits.empty()) c.inits = {"onebit"};
      fill(c.altmin_iters, 200);
      break;
    case ExperimentKind::kAltMinConvergence:
    case ExperimentKind::kCdpConvergence:
      fill(c.n, std::size_t{512});
      if (c.m == 0) fill(c.ratio, 4.0);
      if (c.inits.empty()) c.inits = {"random", "subexp", "onebit", "weighted1bit"};
      fill(c.altmin_iters, 100);
      break;
  }
  fill(c.altmin_iters, 200);
  return c;
}

void to_json(nlohmann::json& j, const ExperimentConfig& c) {
  j = nlohmann::json{
      {"kind", to_string(c.kind)},
      {"n", c.n},
      {"m", c.m},
      {"ratio", c.ratio},
      {"model", c.model},
      {"models", c.models},
      {"alphas", c.alphas},
      {"inits", c.inits},
      {"epsilon", c.epsilon},
      {"c_stages", c.c_stages},
      {"trials", c.trials},
      {"seed", c.seed},
      {"tol", c.tol},
      {"max_iters", c.max_iters},
      {"altmin_iters", c.altmin_iters},
      {"altmin_tol", c.altmin_tol},
      {"ls_tol", c.ls_tol},
      {"refine", c.refine},
      {"shift", c.shift},
      {"samples", c.samples},
      {"threads", c.threads},
      {"out", c.out},
  };
}

void from_json(const nlohmann::json& j, ExperimentConfig& c) {
  c.kind = parse_experiment_kind(j.at("kind").get<std::string>());
  j.at("n").get_to(c.n);
  j.at("m").get_to(c.m);
  j.at("ratio").get_to(c.ratio);
  j.at("model").get_to(c.model);
  j.at("models").get_to(c.models);
  j.at("alphas").get_to(c.alphas);
  j.at("inits").get_to(c.inits);
  j.at("epsilon").get_to(c.epsilon);
  j.at("c_stages").get_to(c.c_stages);
  j.at("trials").get_to(c.trials);
  j.at("seed").get_to(c.seed);
  j.at("tol").get_to(c.tol);
  j.at("max_iters").get_to(c.max_iters);
  j.at("altmin_iters").get_to(c.altmin_iters);
  j.at("altmin_tol").get_to(c.altmin_tol);
  j.at("ls_tol").get_to(c.ls_tol);
  j.at("refine").get_to(c.refine);
  j.at("shift").get_to(c.shift);
  j.at("samples").get_to(c.samples);
  j.at("threads").get_to(c.threads);
  j.at("out").get_to(c.out);
}

std::filesystem::path manifest_path(const std::filesystem::path& out) {
  return std::filesystem::path(out.string() + ".manifest.json");
}

void write_manifest(const std::filesystem::path& path, const ExperimentConfig& config) {
  const nlohmann::json j{{"format", "onebit-manifest"},
                         {"version", std::string(kVersion)},
                         {"config", config}};
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot write manifest '" + path.string() + "'");
  os << j.dump(2) << '\n';
}

ExperimentConfig read_manifest(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot read manifest '" + path.string() + "'");
  try {
    const nlohmann::json j = nlohmann::json::parse(is);
    if (j.at("format") != "onebit-manifest") throw ConfigError("not a onebit manifest");
    const auto version = j.at("version").get<std::string>();
    if (version != kVersion)
      throw ConfigError("manifest version " + version + " != " + std::string(kVersion));
    return j.at("config").get<ExperimentConfig>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed manifest '" + path.string() + "': " + e.what());
  }
}

}  // namespace onebit::bench
