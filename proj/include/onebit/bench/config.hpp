#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace onebit::bench {

inline constexpr std::string_view kVersion = "0.1.0";

enum class ExperimentKind {
  kLambdaSweep,
  kDistortionSweep,
  kRecover,
  kAltMinConvergence,
  kCdpConvergence,
};

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

enum class Refine { kNone, kAltMin, kResampled };
std::string to_string(Refine refine);
Refine parse_refine(std::string_view name);

/// Everything a run depends on. The manifest written next to each CSV is this
/// struct in JSON, so replaying it reproduces the CSV byte for byte.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kRecover;
  /// 0 means the per-kind default.
  std::size_t n = 0;
  /// Pairs (or CDP masks per arm when sensing is coded diffraction). 0 means
  /// ratio * n.
  std::size_t m = 0;
  double ratio = 0.0;
  std::string model = "identity";
  /// Model specs for lambda-sweep; empty means the built-in grid.
  std::vector<std::string> models;
  /// Distortion levels for distortion-sweep.
  std::vector<double> alphas;
  std::vector<std::string> inits;
  double epsilon = 0.1;
  double c_stages = 1.0;
  int trials = 1;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int max_iters = 20000;
  /// AltMin iterations; 0 means the per-kind default.
  int altmin_iters = 0;
  double altmin_tol = 1e-12;
  double ls_tol = 1e-10;
  std::string refine = "none";
  std::string shift = "auto";
  std::size_t samples = 1000000;
  /// Worker threads for the trial pool; 0 means hardware concurrency.
  /// Results do not depend on it.
  int threads = 1;
  std::string out;

  /// m if set, else round(ratio * n).
  std::size_t pairs() const;
  /// Throws ConfigError on any out-of-range field.
  void validate() const;
};

/// Kind-specific defaults (grid values, n, ratio) filled in where the caller
/// left a field at its zero value.
ExperimentConfig with_defaults(ExperimentConfig config);

void to_json(nlohmann::json& j, const ExperimentConfig& config);
void from_json(const nlohmann::json& j, ExperimentConfig& config);

/// `<out>.manifest.json`.
std::filesystem::path manifest_path(const std::filesystem::path& out);
void write_manifest(const std::filesystem::path& path, const ExperimentConfig& config);
/// Throws ConfigError on a missing file, bad JSON, or a version mismatch.
ExperimentConfig read_manifest(const std::filesystem::path& path);

}  // namespace onebit::bench
