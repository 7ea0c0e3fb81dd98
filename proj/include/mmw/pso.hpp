#pragma once

#include "mmw/search.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace mmw {

// Constriction-factor PSO (Clerc & Kennedy).
struct PsoConfig {
  std::size_t population = 30;
  std::size_t iterations = 500;
  double c1 = 2.1;
  double c2 = 2.1;
  std::uint64_t seed = 0;

  // Throws InvalidConfig, in particular when c1 + c2 < 4.
  void validate() const;
};

// chi = 2 / |2 - phi - sqrt(phi (phi - 4))| with phi = c1 + c2. Throws
// InvalidConfig when phi < 4.
[[nodiscard]] double constriction_factor(double c1, double c2);

struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> best_position;
  FitnessValue fitness;
  FitnessValue best_fitness;
};

struct Swarm {
  std::vector<Particle> particles;
  std::vector<double> global_best_position;
  FitnessValue global_best;
};

// One synchronous iteration: every particle uses the global best from the
// start of the step,
//   v <- chi (v + c1 r1 (pb - x) + c2 r2 (gb - x)),  x <- clamp(x + v),
// with fresh U(0,1) r1, r2 per dimension; then personal and global bests are
// refreshed with `better`. Returns the number of evaluations.
std::size_t pso_step(Swarm& swarm, const SearchSpace& space, const Evaluator& evaluate, double c1, double c2,
                     std::uint64_t seed, std::uint64_t iteration);

using PsoObserver = std::function<void(std::size_t iteration, const Swarm&)>;

// Particles start uniformly in the box with zero velocity.
[[nodiscard]] OptimizationResult run_pso(const PsoConfig& config, const SearchSpace& space,
                                         const Evaluator& evaluate, const PsoObserver& observer = {});

}  // namespace mmw
