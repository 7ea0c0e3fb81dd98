#include "mmw/benchgen.hpp"

#include "mmw/errors.hpp"
#include "mmw/manifest.hpp"
#include "mmw/precedence.hpp"
#include "mmw/rng.hpp"

#include <array>
#include <cmath>
#include <numeric>

namespace mmw {
namespace {

constexpr std::array<Zone, 8> kGeneratedZones = {0, 1, 2, 3, 5, 6, 7, 8};
constexpr int kMaxRedraws = 1000;

}  // namespace

void GenSpec::seed_from(std::uint64_t seed) {
  zone_seed = mix_seed(seed, 0x7a6f6e65);       // "zone"
  incidence_seed = mix_seed(seed, 0x696e6364);  // "incd"
}

std::vector<unsigned> round_robin_plan(std::size_t models, unsigned total) {
  if (models == 0) throw InvalidConfig("plan needs at least one model");
  if (total < models) throw InvalidConfig("every model needs at least one unit of demand");
  std::vector<unsigned> plan(models, 0);
  for (unsigned u = 0; u < total; ++u) ++plan[u % models];
  return plan;
}

std::vector<unsigned> default_plan(std::size_t models) {
  if (models == 4) return round_robin_plan(4, 200);
  if (models == 50) return round_robin_plan(50, 998);
  throw InvalidConfig("default production plans exist for 4 or 50 models only; pass an explicit plan");
}

std::vector<Edge> restrict_precedence(std::size_t n, const std::vector<Edge>& edges,
                                      const std::vector<bool>& present) {
  const auto m = CompletePrecedenceMatrix::build(n, edges);
  std::vector<Edge> out;
  for (TaskIndex a = 0; a < n; ++a) {
    if (!present[a]) continue;
    for (auto c : m.successors(a)) {
      if (!present[c]) continue;
      bool implied = false;
      for (auto b : m.successors(a)) {
        if (b != c && present[b] && m.precedes(b, c)) {
          implied = true;
          break;
        }
      }
      if (!implied) out.push_back({a, c});
    }
  }
  return out;
}

GeneratedInstance generate(const GenSpec& spec) {
  const auto n = spec.source.task_count;
  const auto models = spec.plan.size();
  if (models == 0) throw EmptyPlan("production plan has no models");
  if (!(spec.cycle_time > 0.0)) throw InvalidConfig("cycle time must be positive");

  SplitMix64 zone_rng(spec.zone_seed);
  std::vector<Zone> zones(n);
  for (auto& z : zones) z = kGeneratedZones[static_cast<std::size_t>(uniform01(zone_rng) * kGeneratedZones.size())];

  SplitMix64 incidence_rng(spec.incidence_seed);
  MixedModelSpec mixed;
  mixed.plan = spec.plan;
  mixed.model_times.assign(n, std::vector<Time>(models, 0.0));
  mixed.incidence.assign(n, std::vector<std::uint8_t>(models, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t m = 0; m < models; ++m) mixed.model_times[j][m] = spec.source.times[j];
    int draws = 0;
    while (true) {
      bool any = false;
      for (std::size_t m = 0; m < models; ++m) {
        mixed.incidence[j][m] = static_cast<std::uint8_t>(incidence_rng() >> 63);
        any = any || mixed.incidence[j][m] != 0;
      }
      if (any || !spec.require_presence) break;
      if (++draws >= kMaxRedraws) {
        throw GenError("task " + std::to_string(j + 1) + " absent from every model after " +
                       std::to_string(kMaxRedraws) + " redraws");
      }
    }
  }

  mixed.per_model_precedence.resize(models);
  for (std::size_t m = 0; m < models; ++m) {
    std::vector<bool> present(n);
    for (std::size_t j = 0; j < n; ++j) present[j] = mixed.incidence[j][m] != 0;
    mixed.per_model_precedence[m] = restrict_precedence(n, spec.source.edges, present);
  }

  const auto mean = build_mean_model(mixed);
  std::vector<Task> tasks(n);
  for (std::size_t j = 0; j < n; ++j) tasks[j] = Task{mean.mean_times[j], zones[j]};
  const std::string name = spec.source_name + "_" + std::to_string(models) + "M";
  Instance instance(name, std::move(tasks), mean.joint_edges, spec.cycle_time, DisplacementMatrix::standard(),
                    spec.max_workplaces);

  const auto workload = instance.total_base_time();
  auto manifest = instance_to_json(instance);
  nlohmann::json incidence = nlohmann::json::array();
  for (const auto& row : mixed.incidence) {
    std::string bits;
    for (auto b : row) bits.push_back(b != 0 ? '1' : '0');
    incidence.push_back(bits);
  }
  manifest["generation"] = {
      {"source", spec.source_name},
      {"source_total_time", std::accumulate(spec.source.times.begin(), spec.source.times.end(), 0.0)},
      {"models", models},
      {"plan", spec.plan},
      {"zone_seed", spec.zone_seed},
      {"incidence_seed", spec.incidence_seed},
      {"require_presence", spec.require_presence},
      {"incidence", incidence},
      {"workload", workload},
      {"workload_ratio", workload / spec.cycle_time},
      {"lower_bound", instance.workplace_lower_bound()},
  };
  return GeneratedInstance{std::move(mixed), std::move(instance), std::move(manifest)};
}

}  // namespace mmw
