#include "mmw/fss.hpp"

#include "mmw/errors.hpp"

#include <cmath>
#include <numeric>

namespace mmw {
namespace {

constexpr double kDenominatorGuard = 1e-12;
constexpr std::uint64_t kInitIteration = ~std::uint64_t{0};

}  // namespace

void FssConfig::validate() const {
  if (population < 1) throw InvalidConfig("population must be at least 1");
  if (!(step_ind_initial > 0.0)) throw InvalidConfig("step_ind must be positive");
  if (!(step_vol_initial > 0.0)) throw InvalidConfig("step_vol must be positive");
  if (!(w_scale > 1.0)) throw InvalidConfig("w_scale must exceed 1");
  if (!(alpha0 >= 0.0 && alpha0 <= 1.0)) throw InvalidConfig("alpha0 must lie in [0, 1]");
  if (!(alpha_decay_rate >= 0.0)) throw InvalidConfig("alpha decay rate must be non-negative");
}

double School::total_weight() const noexcept {
  return std::accumulate(fish.begin(), fish.end(), 0.0,
                         [](double acc, const Fish& f) { return acc + f.weight; });
}

std::size_t individual_move(School& school, const SearchSpace& space, const Evaluator& evaluate,
                            double step_ind, double alpha, bool sar, bool per_dimension, StreamKey key) {
  const auto dims = space.dims();
  std::vector<double> candidate(dims);
  for (std::size_t i = 0; i < school.fish.size(); ++i) {
    auto& f = school.fish[i];
    auto rng = substream(key.seed, key.iteration, Phase::Individual, i);
    const double shared = uniform(rng, -1.0, 1.0);
    for (std::size_t d = 0; d < dims; ++d) {
      const double r = per_dimension ? uniform(rng, -1.0, 1.0) : shared;
      candidate[d] = f.position[d] + r * step_ind;
    }
    space.clamp(candidate);
    const auto value = evaluate(candidate);

    bool move = better(value, f.fitness);
    f.improved = move;
    if (!move && sar) {
      auto coin = substream(key.seed, key.iteration, Phase::Acceptance, i);
      move = uniform01(coin) < alpha;
    }
    if (move) {
      for (std::size_t d = 0; d < dims; ++d) f.delta_x[d] = candidate[d] - f.position[d];
      f.delta_f = improvement(f.fitness, value);
      f.position = candidate;
      f.fitness = value;
    } else {
      std::fill(f.delta_x.begin(), f.delta_x.end(), 0.0);
      f.delta_f = 0.0;
    }
  }
  return school.fish.size();
}

void feeding(School& school, double w_scale) {
  double max_abs = 0.0;
  for (const auto& f : school.fish) max_abs = std::max(max_abs, std::abs(f.delta_f));
  if (max_abs <= kDenominatorGuard) return;
  for (auto& f : school.fish) {
    f.weight = std::clamp(f.weight + f.delta_f / max_abs, 1.0, w_scale);
  }
}

std::vector<double> instinctive_direction(const School& school, bool improvers_only) {
  const auto dims = school.fish.empty() ? 0 : school.fish.front().position.size();
  std::vector<double> numerator(dims, 0.0);
  double denominator = 0.0;
  for (const auto& f : school.fish) {
    if (improvers_only && !f.improved) continue;
    for (std::size_t d = 0; d < dims; ++d) numerator[d] += f.delta_x[d] * f.delta_f;
    denominator += f.delta_f;
  }
  if (std::abs(denominator) <= kDenominatorGuard) return std::vector<double>(dims, 0.0);
  for (auto& v : numerator) v /= denominator;
  return numerator;
}

void collective_instinctive(School& school, const SearchSpace& space, bool improvers_only) {
  const auto drift = instinctive_direction(school, improvers_only);
  for (auto& f : school.fish) {
    for (std::size_t d = 0; d < drift.size(); ++d) f.position[d] += drift[d];
    space.clamp(f.position);
  }
}

std::vector<double> barycenter(const School& school) {
  const auto dims = school.fish.empty() ? 0 : school.fish.front().position.size();
  std::vector<double> b(dims, 0.0);
  double total = 0.0;
  for (const auto& f : school.fish) {
    for (std::size_t d = 0; d < dims; ++d) b[d] += f.position[d] * f.weight;
    total += f.weight;
  }
  for (auto& v : b) v /= total;
  return b;
}

void collective_volitive(School& school, const SearchSpace& space, double step_vol,
                         double previous_total_weight, bool per_dimension, StreamKey key) {
  const auto b = barycenter(school);
  // Attraction only on a strict gain of school weight.
  const double sign = school.total_weight() > previous_total_weight ? -1.0 : 1.0;
  for (std::size_t i = 0; i < school.fish.size(); ++i) {
    auto& f = school.fish[i];
    double dist_sq = 0.0;
    for (std::size_t d = 0; d < b.size(); ++d) dist_sq += (f.position[d] - b[d]) * (f.position[d] - b[d]);
    const double dist = std::sqrt(dist_sq);
    if (dist < kDenominatorGuard) continue;
    auto rng = substream(key.seed, key.iteration, Phase::Volitive, i);
    const double shared = uniform01(rng);
    for (std::size_t d = 0; d < b.size(); ++d) {
      const double r = per_dimension ? uniform01(rng) : shared;
      f.position[d] += sign * step_vol * r * (f.position[d] - b[d]) / dist;
    }
    space.clamp(f.position);
  }
}

double decay_step(double step, double initial, std::size_t it_max) {
  return std::max(0.0, step - initial / static_cast<double>(it_max));
}

double alpha_schedule(std::size_t t, double alpha0, double rate) {
  return alpha0 * std::exp(-rate * static_cast<double>(t));
}

OptimizationResult run_fss(const FssConfig& config, const SearchSpace& space, const Evaluator& evaluate,
                           const FssObserver& observer) {
  config.validate();
  space.validate();
  const auto dims = space.dims();

  School school;
  school.fish.resize(config.population);
  for (std::size_t i = 0; i < config.population; ++i) {
    auto& f = school.fish[i];
    auto rng = substream(config.seed, kInitIteration, Phase::Init, i);
    f.position.resize(dims);
    for (std::size_t d = 0; d < dims; ++d) f.position[d] = uniform(rng, space.lower[d], space.upper[d]);
    f.delta_x.assign(dims, 0.0);
    f.weight = config.w_scale / 2.0;
  }

  OptimizationResult result;
  bool have_best = false;
  auto consider = [&](const Fish& f) {
    if (!have_best || better(f.fitness, result.best)) {
      result.best = f.fitness;
      result.best_position = f.position;
      have_best = true;
    }
  };
  auto evaluate_school = [&] {
    for (auto& f : school.fish) {
      f.fitness = evaluate(f.position);
      consider(f);
    }
    result.evaluations += school.fish.size();
  };
  auto notify = [&](FssPhase phase, std::size_t t) {
    if (observer) observer(phase, t, school);
  };

  const auto horizon = config.decay_horizon == 0 ? config.iterations : config.decay_horizon;
  double step_ind = config.step_ind_initial;
  double step_vol = config.step_vol_initial;
  double previous_weight = school.total_weight();
  const auto alpha_at = [&](std::size_t t) {
    return config.sar_enabled ? alpha_schedule(t, config.alpha0, config.alpha_decay_rate) : 0.0;
  };
  auto record = [&](std::size_t t) {
    result.trace.push_back(
        TraceRecord{t, result.best, school.total_weight(), step_ind, step_vol, alpha_at(t)});
  };

  evaluate_school();
  notify(FssPhase::Initial, 0);
  record(0);

  for (std::size_t t = 0; t < config.iterations; ++t) {
    const StreamKey key{config.seed, t};
    result.evaluations += individual_move(school, space, evaluate, step_ind, alpha_at(t), config.sar_enabled,
                                          config.per_dimension_individual, key);
    for (const auto& f : school.fish) consider(f);
    notify(FssPhase::Individual, t);

    feeding(school, config.w_scale);
    notify(FssPhase::Feeding, t);

    collective_instinctive(school, space, config.sar_enabled);
    notify(FssPhase::Instinctive, t);

    collective_volitive(school, space, step_vol, previous_weight, config.per_dimension_volitive, key);
    previous_weight = school.total_weight();
    notify(FssPhase::Volitive, t);

    step_ind = decay_step(step_ind, config.step_ind_initial, horizon);
    step_vol = decay_step(step_vol, config.step_vol_initial, horizon);

    evaluate_school();
    record(t + 1);
  }
  return result;
}

}  // namespace mmw
