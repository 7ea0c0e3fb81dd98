#pragma once

#include "mmw/model.hpp"

#include <span>

namespace mmw {

struct BalancingSolution;

// Value of a decoded solution. `primary` is m * sqrt(sum_k (C - t_k)^2);
// `workload` is sum_k t_k (idle time excluded) and breaks ties.
struct FitnessValue {
  double primary = 0.0;
  Time workload = 0.0;
  std::size_t open = 0;
};

inline constexpr double kFitnessTolerance = 1e-9;

// Throws InfeasibleWorkload if some workload exceeds C.
[[nodiscard]] FitnessValue fitness_from_workloads(std::span<const Time> workloads, Time cycle_time);
[[nodiscard]] FitnessValue fitness(const BalancingSolution& solution, Time cycle_time);

// sqrt(sum_k (C - t_k)^2): balance quality without the workplace multiplier.
[[nodiscard]] double smoothness(const BalancingSolution& solution, Time cycle_time);

// Lexicographic: lower primary wins, then lower workload, both with
// tolerance. A strict partial order.
[[nodiscard]] constexpr bool better(const FitnessValue& a, const FitnessValue& b) noexcept {
  if (a.primary < b.primary - kFitnessTolerance) return true;
  if (b.primary < a.primary - kFitnessTolerance) return false;
  return a.workload < b.workload - kFitnessTolerance;
}

// Improvement-positive fitness change used by the swarm operators.
[[nodiscard]] constexpr double improvement(const FitnessValue& before, const FitnessValue& after) noexcept {
  return before.primary - after.primary;
}

}  // namespace mmw
