#pragma once

#include "mmw/solver.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mmw {

inline constexpr int kRawResultsSchemaVersion = 1;

struct ExperimentPlan {
  std::vector<std::filesystem::path> instances;  // instance manifests
  std::vector<Algorithm> algorithms{Algorithm::FssVanilla, Algorithm::FssSar, Algorithm::Pso};
  std::size_t runs_per_cell = 450;
  std::size_t group_size = 15;
  std::size_t iterations = 500;
  std::uint64_t base_seed = 0;
  std::size_t workers = 1;
  // Optimizer parameters shared by every run; algorithm, iterations and
  // seed are overwritten per run.
  SolverConfig solver;

  // Throws InvalidConfig unless runs_per_cell is a positive multiple of
  // group_size and at least one algorithm is selected.
  void validate() const;
  [[nodiscard]] std::size_t samples_per_cell() const { return runs_per_cell / group_size; }
};

// One row of the raw results table.
struct RunRecord {
  std::string instance_id;
  Algorithm algorithm = Algorithm::FssVanilla;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  std::size_t m = 0;  // 0 marks a failed run
  double fitness = 0.0;
  double smoothness = 0.0;
  double workload = 0.0;
  double seconds = 0.0;

  [[nodiscard]] bool failed() const noexcept { return m == 0; }
};

// Seed of run `run` of `algorithm` on `instance_id`.
[[nodiscard]] std::uint64_t run_seed(std::uint64_t base_seed, const std::string& instance_id, Algorithm algorithm,
                                     std::size_t run);

// Called once per finished run, serialized, in completion order.
using RunCallback = std::function<void(const RunRecord&, const BalancingSolution*, const Instance&)>;

// Runs every (instance, algorithm, run) cell, appending rows to `raw_csv` as
// they complete (in run order within a cell). Rows already present in
// `raw_csv` are kept and not re-run; a seed mismatch with an existing row
// throws InvalidConfig. Returns the full table in plan order. A failing run
// is logged and recorded with m = 0; a manifest that fails to load aborts.
std::vector<RunRecord> run_experiment(const ExperimentPlan& plan, const std::filesystem::path& raw_csv,
                                      const RunCallback& on_run = {});

// instance_id,algorithm,run,seed,m,fitness,smoothness,workload,seconds
// preceded by a "# schema_version: 1" line.
void write_raw_header(std::ostream& out);
void write_raw_row(std::ostream& out, const RunRecord& r);
[[nodiscard]] std::vector<RunRecord> read_raw_csv(const std::filesystem::path& path);

}  // namespace mmw
