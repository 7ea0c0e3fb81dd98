#include "mmw/pso.hpp"

#include "mmw/errors.hpp"
#include "mmw/rng.hpp"

#include <cmath>
#include <sstream>

namespace mmw {

void PsoConfig::validate() const {
  if (population < 1) throw InvalidConfig("population must be at least 1");
  (void)constriction_factor(c1, c2);
}

double constriction_factor(double c1, double c2) {
  const double phi = c1 + c2;
  if (!(c1 >= 0.0 && c2 >= 0.0) || !(phi >= 4.0)) {
    std::ostringstream os;
    os << "constriction PSO requires c1 + c2 >= 4 (got c1=" << c1 << ", c2=" << c2 << ")";
    throw InvalidConfig(os.str());
  }
  return 2.0 / std::abs(2.0 - phi - std::sqrt(phi * (phi - 4.0)));
}

std::size_t pso_step(Swarm& swarm, const SearchSpace& space, const Evaluator& evaluate, double c1, double c2,
                     std::uint64_t seed, std::uint64_t iteration) {
  const double chi = constriction_factor(c1, c2);
  const auto gb = swarm.global_best_position;
  for (std::size_t i = 0; i < swarm.particles.size(); ++i) {
    auto& p = swarm.particles[i];
    auto rng = substream(seed, iteration, Phase::Velocity, i);
    for (std::size_t d = 0; d < p.position.size(); ++d) {
      const double r1 = uniform01(rng);
      const double r2 = uniform01(rng);
      p.velocity[d] = chi * (p.velocity[d] + c1 * r1 * (p.best_position[d] - p.position[d]) +
                             c2 * r2 * (gb[d] - p.position[d]));
      p.position[d] += p.velocity[d];
    }
    space.clamp(p.position);
    p.fitness = evaluate(p.position);
    if (better(p.fitness, p.best_fitness)) {
      p.best_fitness = p.fitness;
      p.best_position = p.position;
    }
  }
  for (const auto& p : swarm.particles) {
    if (better(p.best_fitness, swarm.global_best)) {
      swarm.global_best = p.best_fitness;
      swarm.global_best_position = p.best_position;
    }
  }
  return swarm.particles.size();
}

OptimizationResult run_pso(const PsoConfig& config, const SearchSpace& space, const Evaluator& evaluate,
                           const PsoObserver& observer) {
  config.validate();
  space.validate();
  const auto dims = space.dims();

  Swarm swarm;
  swarm.particles.resize(config.population);
  OptimizationResult result;
  for (std::size_t i = 0; i < config.population; ++i) {
    auto& p = swarm.particles[i];
    auto rng = substream(config.seed, ~std::uint64_t{0}, Phase::Init, i);
    p.position.resize(dims);
    for (std::size_t d = 0; d < dims; ++d) p.position[d] = uniform(rng, space.lower[d], space.upper[d]);
    p.velocity.assign(dims, 0.0);
    p.fitness = evaluate(p.position);
    p.best_position = p.position;
    p.best_fitness = p.fitness;
    if (i == 0 || better(p.best_fitness, swarm.global_best)) {
      swarm.global_best = p.best_fitness;
      swarm.global_best_position = p.best_position;
    }
  }
  result.evaluations = config.population;
  auto record = [&](std::size_t t) {
    TraceRecord r;
    r.iteration = t;
    r.best = swarm.global_best;
    result.trace.push_back(r);
  };
  if (observer) observer(0, swarm);
  record(0);

  for (std::size_t t = 0; t < config.iterations; ++t) {
    result.evaluations += pso_step(swarm, space, evaluate, config.c1, config.c2, config.seed, t);
    if (observer) observer(t + 1, swarm);
    record(t + 1);
  }
  result.best = swarm.global_best;
  result.best_position = swarm.global_best_position;
  return result;
}

}  // namespace mmw
