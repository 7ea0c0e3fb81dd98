#pragma once

#include "mmw/alb.hpp"
#include "mmw/model.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mmw {

// Recipe that turns a single-model SALBP-1 instance into a mixed-model
// workplace instance.
struct GenSpec {
  std::string source_name;
  AlbInstance source;
  std::vector<unsigned> plan;  // demanded units per model
  std::uint64_t zone_seed = 0;
  std::uint64_t incidence_seed = 0;
  Time cycle_time = 1000.0;
  std::size_t max_workplaces = 3;
  // Redraw incidence rows until each task belongs to at least one model.
  bool require_presence = true;

  // Zone and incidence seeds derived from one user-facing seed.
  void seed_from(std::uint64_t seed);
};

// Equal shares: 50 units each for 4 models (200 total), 19 or 20 units each
// for 50 models (998 total) handed out round-robin. Throws InvalidConfig
// for any other model count.
[[nodiscard]] std::vector<unsigned> default_plan(std::size_t models);

// Round-robin split of `total` units over `models` models.
[[nodiscard]] std::vector<unsigned> round_robin_plan(std::size_t models, unsigned total);

struct GeneratedInstance {
  MixedModelSpec mixed;
  Instance instance;
  nlohmann::json manifest;  // instance manifest plus a "generation" record
};

// Zones are uniform over {0..8} \ {4}; incidence entries are fair coin
// flips. Every model uses the source task times, and its precedence graph is
// the source order restricted to the tasks it contains (a precedes c in the
// model iff a precedes c in the source). The mean model and joint graph give
// the instance. Throws GenError if the presence guard keeps failing.
[[nodiscard]] GeneratedInstance generate(const GenSpec& spec);

// Transitive reduction of the source order restricted to `present` tasks.
[[nodiscard]] std::vector<Edge> restrict_precedence(std::size_t n, const std::vector<Edge>& edges,
                                                    const std::vector<bool>& present);

}  // namespace mmw
