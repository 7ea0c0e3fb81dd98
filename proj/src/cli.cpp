#include "mmw/cli.hpp"

#include "mmw/benchgen.hpp"
#include "mmw/errors.hpp"
#include "mmw/experiment.hpp"
#include "mmw/manifest.hpp"
#include "mmw/report.hpp"
#include "mmw/solution_io.hpp"
#include "mmw/solver.hpp"
#include "mmw/validate.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

namespace mmw::cli {
namespace {

namespace fs = std::filesystem;

std::uint64_t seed_or_draw(const std::optional<std::uint64_t>& seed, std::ostream& out) {
  if (seed) return *seed;
  std::random_device rd;
  const auto drawn = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  out << "seed: " << drawn << "\n";
  return drawn;
}

std::size_t default_workers() {
  if (const char* env = std::getenv("MMW_WORKERS")) {
    try {
      const auto v = std::stoul(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// Optimizer flags shared by `solve` and `experiment`.
struct SolverFlags {
  std::string config_file;
  std::optional<std::size_t> population;
  std::optional<double> w_scale, step_ind, step_vol, alpha0, alpha_decay, c1, c2, lower, upper;
  std::optional<std::string> displacement_mode;

  void attach(CLI::App& app) {
    app.add_option("--config", config_file, "JSON file with solver settings")->check(CLI::ExistingFile);
    app.add_option("--pop", population, "Population size");
    app.add_option("--w-scale", w_scale, "FSS maximum fish weight");
    app.add_option("--step-ind", step_ind, "FSS initial individual step");
    app.add_option("--step-vol", step_vol, "FSS initial volitive step");
    app.add_option("--alpha0", alpha0, "FSS-SAR initial worsening probability");
    app.add_option("--alpha-decay", alpha_decay, "FSS-SAR exponential decay rate");
    app.add_option("--c1", c1, "PSO cognitive coefficient");
    app.add_option("--c2", c2, "PSO social coefficient");
    app.add_option("--lower", lower, "Search space lower bound");
    app.add_option("--upper", upper, "Search space upper bound");
    app.add_option("--displacement-mode", displacement_mode, "home_zone or previous_task");
  }

  void apply(SolverConfig& c) const {
    if (!config_file.empty()) apply_config_json(c, read_json_file(config_file));
    if (population) c.population = *population;
    if (w_scale) c.w_scale = *w_scale;
    if (step_ind) c.step_ind = *step_ind;
    if (step_vol) c.step_vol = *step_vol;
    if (alpha0) c.alpha0 = *alpha0;
    if (alpha_decay) c.alpha_decay_rate = *alpha_decay;
    if (c1) c.c1 = *c1;
    if (c2) c.c2 = *c2;
    if (lower) c.lower = *lower;
    if (upper) c.upper = *upper;
    if (displacement_mode) c.decoder.displacement = displacement_mode_from_string(*displacement_mode);
  }
};

struct GenerateArgs {
  std::string source;
  std::size_t models = 4;
  std::vector<unsigned> plan;
  std::optional<std::uint64_t> seed;
  double cycle_time = 1000.0;
  std::size_t max_workplaces = 3;
  std::string name;
  bool no_presence_guard = false;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  GenSpec spec;
  spec.source = load_alb_file(a.source);
  spec.source_name = a.name.empty() ? fs::path(a.source).stem().string() : a.name;
  spec.plan = a.plan.empty() ? default_plan(a.models) : a.plan;
  if (!a.plan.empty() && a.plan.size() != a.models) {
    throw InvalidConfig("--plan lists " + std::to_string(a.plan.size()) + " models but --models is " +
                        std::to_string(a.models));
  }
  spec.seed_from(seed_or_draw(a.seed, out));
  spec.cycle_time = a.cycle_time;
  spec.max_workplaces = a.max_workplaces;
  spec.require_presence = !a.no_presence_guard;
  const auto generated = generate(spec);
  write_json_file(a.out, generated.manifest);
  out << "wrote " << a.out << ": " << generated.instance.size() << " tasks, workload "
      << generated.instance.total_base_time() << ", lower bound " << generated.instance.workplace_lower_bound()
      << " workplaces\n";
  return kSuccess;
}

struct SolveArgs {
  std::string manifest;
  std::string algo = "fss-sar";
  std::size_t iterations = 500;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  std::string prefix;
  SolverFlags flags;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const auto instance = read_instance_file(a.manifest);
  const auto precedence = CompletePrecedenceMatrix::build(instance.size(), instance.edges());

  SolverConfig config;
  config.algorithm = algorithm_from_string(a.algo);
  a.flags.apply(config);
  config.algorithm = algorithm_from_string(a.algo);
  config.iterations = a.iterations;
  config.seed = seed_or_draw(a.seed, out);
  config.validate();

  const auto result = solve(instance, precedence, config);

  fs::create_directories(a.out_dir);
  const auto prefix = a.prefix.empty() ? fs::path(a.manifest).stem().string() : a.prefix;
  const auto base = fs::path(a.out_dir) / prefix;
  auto solution_json = solution_to_json(result.best, instance, config.decoder.displacement);
  solution_json["solver"] = config_to_json(config);
  write_json_file(base.string() + "_solution.json", solution_json);
  {
    std::ofstream gantt(base.string() + "_gantt.txt");
    render_gantt(gantt, result.best, instance);
  }
  {
    std::ofstream trace(base.string() + "_trace.csv");
    write_trace_csv(trace, result.trace);
  }
  out << to_string(config.algorithm) << ": " << result.best.open_workplaces << " open workplaces, fitness "
      << result.best.fitness.primary << ", total workload " << result.best.total_workload << "\n";
  out << "wrote " << base.string() << "_{solution.json,gantt.txt,trace.csv}\n";
  return kSuccess;
}

struct ExperimentArgs {
  std::vector<std::string> instances;
  std::vector<std::string> algos{"fss-v", "fss-sar", "pso"};
  std::size_t runs = 450;
  std::size_t group_size = 15;
  std::size_t iterations = 500;
  std::optional<std::uint64_t> seed;
  std::size_t workers = default_workers();
  std::string out = "raw_results.csv";
  std::string solutions_dir;
  SolverFlags flags;
};

int cmd_experiment(const ExperimentArgs& a, std::ostream& out) {
  ExperimentPlan plan;
  for (const auto& i : a.instances) plan.instances.emplace_back(i);
  plan.algorithms.clear();
  for (const auto& s : a.algos) plan.algorithms.push_back(algorithm_from_string(s));
  plan.runs_per_cell = a.runs;
  plan.group_size = a.group_size;
  plan.iterations = a.iterations;
  plan.workers = a.workers;
  plan.base_seed = seed_or_draw(a.seed, out);
  a.flags.apply(plan.solver);
  plan.validate();

  RunCallback on_run;
  if (!a.solutions_dir.empty()) {
    fs::create_directories(a.solutions_dir);
    on_run = [&](const RunRecord& r, const BalancingSolution* sol, const Instance& inst) {
      if (sol == nullptr) return;
      const auto file = fs::path(a.solutions_dir) /
                        (r.instance_id + "_" + std::string(to_string(r.algorithm)) + "_" + std::to_string(r.run) +
                         ".json");
      write_json_file(file, solution_to_json(*sol, inst, plan.solver.decoder.displacement));
    };
  }
  const auto rows = run_experiment(plan, a.out, on_run);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.failed() ? 1 : 0;
  out << "wrote " << rows.size() << " rows to " << a.out << " (" << failed << " failed runs)\n";
  return kSuccess;
}

int cmd_report(const std::string& raw, std::size_t group_size, const std::string& out_dir, std::ostream& out) {
  const auto rows = read_raw_csv(raw);
  const auto analysis = analyze(rows, group_size);
  const auto files = render_report(analysis, out_dir);
  out << "wrote " << files.best_m.string() << ", " << files.anova_f.string() << ", "
      << files.anova_detail.string() << ", " << files.ci_series.string() << ", " << files.summary.string()
      << "\n";
  return kSuccess;
}

int cmd_validate(const std::string& manifest, const std::string& solution_file, std::ostream& out) {
  const auto instance = read_instance_file(manifest);
  const auto j = read_json_file(solution_file);
  const auto solution = solution_from_json(j);
  const auto mode = displacement_mode_from_string(j.value("displacement_mode", std::string("home_zone")));
  const auto report = validate_solution(instance, solution, mode);
  for (const auto& v : report.violations) out << "violation: " << v << "\n";
  if (report.ok()) {
    out << "valid: " << solution.open_workplaces << " open workplaces\n";
    return kSuccess;
  }
  out << "invalid: " << report.violations.size() << " violation(s)\n";
  return kInfeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed-model workplace assembly line balancing (type 1) with swarm optimizers"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Derive a mixed-model instance manifest from a .alb file");
  generate_cmd->add_option("--source", gen.source, "SALBP .alb file")->required()->check(CLI::ExistingFile);
  generate_cmd->add_option("--models", gen.models, "Number of models (4 or 50 unless --plan is given)");
  generate_cmd->add_option("--plan", gen.plan, "Demanded units per model")->delimiter(',');
  generate_cmd->add_option("--seed", gen.seed, "Generation seed");
  generate_cmd->add_option("--cycle-time", gen.cycle_time, "Cycle time");
  generate_cmd->add_option("--max-workplaces", gen.max_workplaces, "Workplace cap per workstation (1-8)");
  generate_cmd->add_option("--name", gen.name, "Instance name prefix (default: source file stem)");
  generate_cmd->add_flag("--no-presence-guard", gen.no_presence_guard,
                         "Allow tasks that belong to no model (they keep zero time)");
  generate_cmd->add_option("--out", gen.out, "Manifest to write")->required();

  SolveArgs sol;
  auto* solve_cmd = app.add_subcommand("solve", "Run one optimizer on an instance manifest");
  solve_cmd->add_option("manifest", sol.manifest, "Instance manifest")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--algo", sol.algo, "fss-v, fss-sar or pso");
  solve_cmd->add_option("--iters", sol.iterations, "Iterations");
  solve_cmd->add_option("--seed", sol.seed, "Run seed");
  solve_cmd->add_option("--out-dir", sol.out_dir, "Output directory");
  solve_cmd->add_option("--prefix", sol.prefix, "Output file prefix (default: manifest stem)");
  sol.flags.attach(*solve_cmd);

  ExperimentArgs exp;
  auto* experiment_cmd = app.add_subcommand("experiment", "Repeated runs over instances and algorithms");
  experiment_cmd->add_option("--instances", exp.instances, "Instance manifests")->required()->check(CLI::ExistingFile);
  experiment_cmd->add_option("--algos", exp.algos, "Algorithms")->delimiter(',');
  experiment_cmd->add_option("--runs", exp.runs, "Runs per instance and algorithm");
  experiment_cmd->add_option("--group-size", exp.group_size, "Runs pooled into one sample");
  experiment_cmd->add_option("--iters", exp.iterations, "Iterations per run");
  experiment_cmd->add_option("--seed", exp.seed, "Base seed");
  experiment_cmd->add_option("--workers", exp.workers, "Concurrent runs (default: $MMW_WORKERS or 1)");
  experiment_cmd->add_option("--out", exp.out, "Raw results CSV (appended, resumable)");
  experiment_cmd->add_option("--solutions-dir", exp.solutions_dir, "Write every best solution as JSON here");
  exp.flags.attach(*experiment_cmd);

  std::string raw;
  std::size_t report_group = 15;
  std::string report_dir = "report";
  auto* report_cmd = app.add_subcommand("report", "Pool raw results, run ANOVA and write report files");
  report_cmd->add_option("--raw", raw, "Raw results CSV")->required()->check(CLI::ExistingFile);
  report_cmd->add_option("--group-size", report_group, "Runs pooled into one sample");
  report_cmd->add_option("--out-dir", report_dir, "Output directory");

  std::string manifest;
  std::string solution_file;
  auto* validate_cmd = app.add_subcommand("validate", "Check a solution against its instance");
  validate_cmd->add_option("--manifest", manifest, "Instance manifest")->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("--solution", solution_file, "Solution JSON")->required()->check(CLI::ExistingFile);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*generate_cmd) return cmd_generate(gen, out);
    if (*solve_cmd) return cmd_solve(sol, out);
    if (*experiment_cmd) return cmd_experiment(exp, out);
    if (*report_cmd) return cmd_report(raw, report_group, report_dir, out);
    if (*validate_cmd) return cmd_validate(manifest, solution_file, out);
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InfeasibleTask& e) {
    err << "infeasible: task " << e.task_id() << ": " << e.what() << "\n";
    return kInfeasible;
  } catch (const InfeasibleWorkload& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace mmw::cli
