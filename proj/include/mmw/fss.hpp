#pragma once

#include "mmw/rng.hpp"
#include "mmw/search.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace mmw {

struct FssConfig {
  std::size_t population = 30;
  std::size_t iterations = 500;  // It_max
  // Horizon of the linear step decay; 0 means `iterations`. Lets a short
  // run follow the schedule of a longer one.
  std::size_t decay_horizon = 0;
  double step_ind_initial = 20.0;
  double step_vol_initial = 20.0;
  double w_scale = 1000.0;
  bool sar_enabled = false;
  double alpha0 = 0.8;
  double alpha_decay_rate = 0.007;
  // Individual move: one U(-1,1) draw per dimension, or one per fish.
  bool per_dimension_individual = true;
  // Volitive move: one U(0,1) draw per fish, or one per dimension.
  bool per_dimension_volitive = false;
  std::uint64_t seed = 0;

  // Throws InvalidConfig.
  void validate() const;
};

struct Fish {
  std::vector<double> position;
  double weight = 0.0;
  std::vector<double> delta_x;  // displacement of the last individual move
  double delta_f = 0.0;         // improvement-positive fitness change of that move
  bool improved = false;
  FitnessValue fitness;
};

struct School {
  std::vector<Fish> fish;

  [[nodiscard]] double total_weight() const noexcept;
};

// Identifies the random substreams of one operator call.
struct StreamKey {
  std::uint64_t seed = 0;
  std::uint64_t iteration = 0;
};

// Each fish proposes x + U(-1,1) * step_ind, clamped. Improving proposals
// (by `better`) are accepted and flagged; with `sar` a rejected proposal is
// still taken with probability alpha but left unflagged. Fish that stay put
// get delta_x = 0 and delta_f = 0. Returns the number of evaluations.
std::size_t individual_move(School& school, const SearchSpace& space, const Evaluator& evaluate,
                            double step_ind, double alpha, bool sar, bool per_dimension, StreamKey key);

// W += delta_f / max|delta_f|, clamped to [1, w_scale]. No-op when every
// |delta_f| is below 1e-12.
void feeding(School& school, double w_scale);

// sum(delta_x * delta_f) / sum(delta_f) over all fish, or over the flagged
// improvers when `improvers_only`. Zero vector if the denominator is <= 1e-12.
[[nodiscard]] std::vector<double> instinctive_direction(const School& school, bool improvers_only);

// Moves every fish by the instinctive direction, clamped.
void collective_instinctive(School& school, const SearchSpace& space, bool improvers_only);

// Weight-weighted centroid of the school.
[[nodiscard]] std::vector<double> barycenter(const School& school);

// Contracts towards the barycenter when the school weight grew since
// `previous_total_weight`, otherwise expands away from it. Fish closer than
// 1e-12 to the barycenter stay.
void collective_volitive(School& school, const SearchSpace& space, double step_vol,
                         double previous_total_weight, bool per_dimension, StreamKey key);

// step - initial / it_max, floored at zero.
[[nodiscard]] double decay_step(double step, double initial, std::size_t it_max);

// alpha0 * exp(-rate * t).
[[nodiscard]] double alpha_schedule(std::size_t t, double alpha0 = 0.8, double rate = 0.007);

enum class FssPhase { Initial, Individual, Feeding, Instinctive, Volitive };

// Called after every operator with the updated school.
using FssObserver = std::function<void(FssPhase, std::size_t iteration, const School&)>;

// Fish School Search; SAR when config.sar_enabled. Per iteration: evaluate,
// individual move (evaluates proposals), feeding, collective-instinctive,
// collective-volitive, step decay. The final school is evaluated once more so
// a zero-iteration run returns the best initial fish.
[[nodiscard]] OptimizationResult run_fss(const FssConfig& config, const SearchSpace& space,
                                         const Evaluator& evaluate, const FssObserver& observer = {});

}  // namespace mmw
