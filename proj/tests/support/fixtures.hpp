#pragma once

#include "mmw/alb.hpp"
#include "mmw/benchgen.hpp"
#include "mmw/model.hpp"
#include "mmw/rng.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace mmw::test {

inline std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(MMW_DATA_DIR) / name;
}

inline const std::vector<Zone>& outer_zones() {
  static const std::vector<Zone> zones{0, 1, 2, 3, 5, 6, 7, 8};
  return zones;
}

// Random DAG over n nodes: edges follow a hidden random topological order.
inline std::vector<Edge> random_dag(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<TaskIndex> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.push_back({label[a], label[b]});
    }
  }
  return edges;
}

// Small random instance; times are multiples of 0.5 so sums stay exact.
inline Instance random_instance(std::size_t n, std::mt19937_64& rng, Time cycle_time = 100.0,
                                std::size_t max_workplaces = 3, double density = 0.3) {
  std::uniform_int_distribution<int> half_units(0, static_cast<int>(cycle_time * 2 * 0.7));
  std::uniform_int_distribution<std::size_t> zone_pick(0, outer_zones().size() - 1);
  std::vector<Task> tasks(n);
  for (auto& t : tasks) {
    t.base_time = half_units(rng) / 2.0;
    t.zone = outer_zones()[zone_pick(rng)];
  }
  return Instance("random", std::move(tasks), random_dag(n, density, rng), cycle_time,
                  DisplacementMatrix::standard(), max_workplaces);
}

inline GeneratedInstance generate_from(const std::string& alb, std::size_t models, std::uint64_t seed) {
  GenSpec spec;
  spec.source_name = std::filesystem::path(alb).stem().string();
  spec.source = load_alb_file(data_file(alb));
  spec.plan = default_plan(models);
  spec.seed_from(seed);
  return generate(spec);
}

inline GeneratedInstance small_4m(std::uint64_t seed = 1) {
  return generate_from("n20_26_surrogate.alb", 4, seed);
}

}  // namespace mmw::test
