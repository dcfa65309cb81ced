#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burnlab/bounds.hpp"

namespace burnlab {

inline constexpr const char* kArtifactVersion = "1.0.0";

/// Parsed from flat `key = value` lines; repeated keys build lists, `#`
/// starts a comment.
struct ExperimentConfig {
  std::vector<Rational> c_values;
  std::vector<std::int64_t> n_values;
  /// Full-burn strategies to tabulate: multi_path, composed_small_c.
  std::vector<std::string> strategies{"multi_path", "composed_small_c"};
  /// Solve exactly when m*n is at most this (0 disables).
  std::int64_t exact_max_vertices = 64;
  std::int64_t exact_budget = 20'000'000;
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> plot_path;
  std::optional<std::filesystem::path> cache_dir;
  std::uint64_t seed = 1;
  int threads = 1;
};

/// Throws InputError("line N: ...") on malformed input.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

struct ResultRow {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Rational c;
  std::optional<std::int64_t> exact;
  std::int64_t finite_lower = 0;
  double asym_lower = 0.0;
  /// Rounds per strategy, in config order; empty when the branch does not apply.
  std::vector<std::optional<std::int64_t>> strategy_rounds;
  double formula_upper = 0.0;
  double prior_reference = 0.0;
  double seconds = 0.0;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);

/// JSON files named by the hash of (operation, parameters, artifact version).
class ResultCache {
 public:
  explicit ResultCache(std::optional<std::filesystem::path> dir);

  bool enabled() const noexcept { return dir_.has_value(); }
  std::optional<std::string> load(const std::string& op, const std::string& params) const;
  void store(const std::string& op, const std::string& params, const std::string& payload) const;

 private:
  std::filesystem::path file_for(const std::string& key) const;
  std::string key_text(const std::string& op, const std::string& params) const;

  std::optional<std::filesystem::path> dir_;
};

/// One row per (c, n), computed on up to config.threads workers and returned
/// sorted by (c, n).
std::vector<ResultRow> run_table(const ExperimentConfig& config, const ResultCache& cache);

std::string csv_header(const ExperimentConfig& config);
std::string to_csv(const ExperimentConfig& config, const std::vector<ResultRow>& rows);

/// Line chart of value / sqrt(n) against log10 n, one series per bound or
/// strategy and c value.
std::string scaling_svg(const ExperimentConfig& config, const std::vector<ResultRow>& rows);

}  // namespace burnlab
