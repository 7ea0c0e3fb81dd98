#include "mmw/solver.hpp"

#include "mmw/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

namespace mmw {

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::FssVanilla:
      return "FSS-V";
    case Algorithm::FssSar:
      return "FSS-SAR";
    case Algorithm::Pso:
      return "PSO";
  }
  return "FSS-V";
}

Algorithm algorithm_from_string(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "fss-v" || lower == "fss-vanilla" || lower == "fss") return Algorithm::FssVanilla;
  if (lower == "fss-sar") return Algorithm::FssSar;
  if (lower == "pso") return Algorithm::Pso;
  throw InvalidConfig("unknown algorithm '" + std::string(text) + "'");
}

FssConfig SolverConfig::fss() const {
  FssConfig c;
  c.population = population;
  c.iterations = iterations;
  c.step_ind_initial = step_ind;
  c.step_vol_initial = step_vol;
  c.w_scale = w_scale;
  c.sar_enabled = algorithm == Algorithm::FssSar;
  c.alpha0 = alpha0;
  c.alpha_decay_rate = alpha_decay_rate;
  c.per_dimension_individual = per_dimension_individual;
  c.per_dimension_volitive = per_dimension_volitive;
  c.seed = seed;
  return c;
}

PsoConfig SolverConfig::pso() const {
  return PsoConfig{population, iterations, c1, c2, seed};
}

void SolverConfig::validate() const {
  if (!(lower < upper)) throw InvalidConfig("lower bound must be below upper bound");
  if (algorithm == Algorithm::Pso) {
    pso().validate();
  } else {
    fss().validate();
  }
}

void apply_config_json(SolverConfig& config, const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidConfig("solver config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "algorithm") config.algorithm = algorithm_from_string(value.get<std::string>());
      else if (key == "iterations") config.iterations = value.get<std::size_t>();
      else if (key == "population") config.population = value.get<std::size_t>();
      else if (key == "seed") config.seed = value.get<std::uint64_t>();
      else if (key == "lower") config.lower = value.get<double>();
      else if (key == "upper") config.upper = value.get<double>();
      else if (key == "w_scale") config.w_scale = value.get<double>();
      else if (key == "step_ind") config.step_ind = value.get<double>();
      else if (key == "step_vol") config.step_vol = value.get<double>();
      else if (key == "alpha0") config.alpha0 = value.get<double>();
      else if (key == "alpha_decay_rate") config.alpha_decay_rate = value.get<double>();
      else if (key == "per_dimension_individual") config.per_dimension_individual = value.get<bool>();
      else if (key == "per_dimension_volitive") config.per_dimension_volitive = value.get<bool>();
      else if (key == "c1") config.c1 = value.get<double>();
      else if (key == "c2") config.c2 = value.get<double>();
      else if (key == "displacement_mode")
        config.decoder.displacement = displacement_mode_from_string(value.get<std::string>());
      else throw InvalidConfig("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidConfig(std::string("bad config value: ") + e.what());
  }
}

nlohmann::json config_to_json(const SolverConfig& c) {
  return nlohmann::json{
      {"algorithm", std::string(to_string(c.algorithm))},
      {"iterations", c.iterations},
      {"population", c.population},
      {"seed", c.seed},
      {"lower", c.lower},
      {"upper", c.upper},
      {"w_scale", c.w_scale},
      {"step_ind", c.step_ind},
      {"step_vol", c.step_vol},
      {"alpha0", c.alpha0},
      {"alpha_decay_rate", c.alpha_decay_rate},
      {"per_dimension_individual", c.per_dimension_individual},
      {"per_dimension_volitive", c.per_dimension_volitive},
      {"c1", c.c1},
      {"c2", c.c2},
      {"displacement_mode", std::string(to_string(c.decoder.displacement))},
  };
}

SolveResult solve(const Instance& instance, const CompletePrecedenceMatrix& precedence,
                  const SolverConfig& config, const SolutionObserver& on_decode) {
  config.validate();
  const auto space = SearchSpace::uniform(instance.size(), config.lower, config.upper);
  const Evaluator evaluate = [&](std::span<const double> x) {
    auto sol = decode(x, instance, precedence, config.decoder);
    if (on_decode) on_decode(sol);
    return sol.fitness;
  };

  auto opt = config.algorithm == Algorithm::Pso ? run_pso(config.pso(), space, evaluate)
                                                : run_fss(config.fss(), space, evaluate);
  SolveResult out;
  out.best = decode(opt.best_position, instance, precedence, config.decoder);
  out.best_position = std::move(opt.best_position);
  out.trace = std::move(opt.trace);
  out.evaluations = opt.evaluations;
  return out;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace) {
  out << "iteration,best_primary,best_workload,best_m,school_weight\n";
  out << std::setprecision(17);
  for (const auto& r : trace) {
    out << r.iteration << ',' << r.best.primary << ',' << r.best.workload << ',' << r.best.open << ',';
    if (!std::isnan(r.school_weight)) out << r.school_weight;
    out << '\n';
  }
}

}  // namespace mmw
