#pragma once

#include "mmw/decoder.hpp"
#include "mmw/solution.hpp"

#include <json.hpp>

#include <iosfwd>

namespace mmw {

inline constexpr int kSolutionSchemaVersion = 1;

// Stations, workplaces and scheduled tasks with 1-based ids and station
// indices.
[[nodiscard]] nlohmann::json solution_to_json(const BalancingSolution& solution, const Instance& instance,
                                              DisplacementMode mode = DisplacementMode::HomeZone);

// Reads the layout written by solution_to_json. Only structural checks are
// made here; feasibility is the validator's job. Throws InvalidInstance.
[[nodiscard]] BalancingSolution solution_from_json(const nlohmann::json& j);

// One block per workstation and one row per workplace. '#' and '=' alternate
// between consecutive tasks, '.' marks idle time and ' ' unused capacity.
void render_gantt(std::ostream& out, const BalancingSolution& solution, const Instance& instance,
                  std::size_t width = 60);

}  // namespace mmw
