#pragma once

#include "mmw/decoder.hpp"
#include "mmw/fss.hpp"
#include "mmw/pso.hpp"

#include <json.hpp>

#include <functional>
#include <iosfwd>
#include <string_view>

namespace mmw {

enum class Algorithm { FssVanilla, FssSar, Pso };

[[nodiscard]] std::string_view to_string(Algorithm a) noexcept;
// Accepts "fss-v", "fss-sar", "pso" (case-insensitive). Throws InvalidConfig.
[[nodiscard]] Algorithm algorithm_from_string(std::string_view text);

// Everything needed to reproduce one solver run. Defaults are parameter set
// 15 (W_scale 1000, step_ind 20, step_vol 20), 30 agents, 500 iterations,
// bounds [-100, 100], c1 = c2 = 2.1.
struct SolverConfig {
  Algorithm algorithm = Algorithm::FssSar;
  std::size_t iterations = 500;
  std::size_t population = 30;
  std::uint64_t seed = 0;
  double lower = -100.0;
  double upper = 100.0;
  double w_scale = 1000.0;
  double step_ind = 20.0;
  double step_vol = 20.0;
  double alpha0 = 0.8;
  double alpha_decay_rate = 0.007;
  bool per_dimension_individual = true;
  bool per_dimension_volitive = false;
  double c1 = 2.1;
  double c2 = 2.1;
  DecoderOptions decoder;

  [[nodiscard]] FssConfig fss() const;
  [[nodiscard]] PsoConfig pso() const;
  // Throws InvalidConfig.
  void validate() const;
};

// Overrides fields from a JSON object whose keys mirror the field names
// ("algorithm", "iterations", "population", "seed", "lower", "upper",
// "w_scale", "step_ind", "step_vol", "alpha0", "alpha_decay_rate",
// "per_dimension_individual", "per_dimension_volitive", "c1", "c2",
// "displacement_mode"). Unknown keys throw InvalidConfig.
void apply_config_json(SolverConfig& config, const nlohmann::json& j);
[[nodiscard]] nlohmann::json config_to_json(const SolverConfig& config);

struct SolveResult {
  BalancingSolution best;
  std::vector<double> best_position;
  std::vector<TraceRecord> trace;
  std::size_t evaluations = 0;
};

using SolutionObserver = std::function<void(const BalancingSolution&)>;

// Runs the configured optimizer on the instance. Every decoded candidate is
// passed to `on_decode` when set. Fully determined by config.seed.
[[nodiscard]] SolveResult solve(const Instance& instance, const CompletePrecedenceMatrix& precedence,
                                const SolverConfig& config, const SolutionObserver& on_decode = {});

// CSV: iteration,best_primary,best_workload,best_m,school_weight. The weight
// column is empty for PSO.
void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace);

}  // namespace mmw
