#pragma once

#include "mmw/experiment.hpp"
#include "mmw/stats.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mmw {

inline constexpr int kReportSchemaVersion = 1;

enum class Criterion { Smoothness, Workload };
[[nodiscard]] std::string_view to_string(Criterion c) noexcept;

struct CellSummary {
  std::string instance_id;
  Algorithm algorithm = Algorithm::FssVanilla;
  std::size_t runs = 0;
  std::size_t failed = 0;
  std::size_t best_m = 0;
  double mean_m = 0.0;
  double mean_fitness = 0.0;
  double mean_smoothness = 0.0;
  double mean_workload = 0.0;
  std::vector<double> smoothness_samples;  // pooled group means
  std::vector<double> workload_samples;
};

struct AnovaEntry {
  std::string instance_id;
  Criterion criterion = Criterion::Smoothness;
  std::vector<Algorithm> algorithms;  // group order
  AnovaResult result;
};

struct Analysis {
  std::size_t group_size = 0;
  std::vector<std::string> instances;  // first-seen order
  std::vector<Algorithm> algorithms;   // first-seen order
  std::vector<CellSummary> cells;
  std::vector<AnovaEntry> anova;  // only where >= 2 algorithms have >= 2 samples
};

// Pools the runs of every (instance, algorithm) cell into group means
// (successful runs only; a trailing partial group is dropped) and runs a
// one-way ANOVA across algorithms per instance and criterion.
[[nodiscard]] Analysis analyze(const std::vector<RunRecord>& raw, std::size_t group_size);

struct ReportFiles {
  std::filesystem::path best_m;       // best number of open workplaces, instance x algorithm
  std::filesystem::path anova_f;      // F values, criterion x instance
  std::filesystem::path anova_detail; // one row per ANOVA with both reference verdicts
  std::filesystem::path ci_series;    // pooled confidence intervals per algorithm
  std::filesystem::path summary;      // JSON
};

// Writes the report files into `out_dir` (created if needed).
ReportFiles render_report(const Analysis& analysis, const std::filesystem::path& out_dir);

[[nodiscard]] nlohmann::json summary_json(const Analysis& analysis);

}  // namespace mmw
