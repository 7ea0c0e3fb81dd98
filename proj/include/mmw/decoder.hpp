#pragma once

#include "mmw/model.hpp"
#include "mmw/precedence.hpp"
#include "mmw/solution.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace mmw {

// Origin of the displacement charged to a task placed off its zone.
enum class DisplacementMode {
  HomeZone,      // from the workplace's home zone (default)
  PreviousTask,  // from the zone of the workplace's previous task
};

[[nodiscard]] std::string_view to_string(DisplacementMode mode) noexcept;
[[nodiscard]] DisplacementMode displacement_mode_from_string(std::string_view text);

struct DecoderOptions {
  DisplacementMode displacement = DisplacementMode::HomeZone;
};

// Random-keys rank transform: result[i] is the rank of position[i], so the
// smallest coordinate becomes task 0. Equal values rank by lower index.
// Throws InvalidPosition on NaN.
[[nodiscard]] std::vector<TaskIndex> random_keys(std::span<const double> position);

// Builds the line from a precedence-feasible task order.
//
// Stations are opened left to right. For each station:
//   1. take the longest prefix of the remaining order whose base times sum to
//      at most max_workplaces * C;
//   2. rank the zones of that prefix by total base time (descending, ties by
//      zone index);
//   3. open workplaces at the top min(max_workplaces, #zones) zones;
//   4. place prefix tasks in order, first on the workplace of their own zone,
//      then on the others by ascending displacement time (ties by zone);
//   5. the corrected duration is base + displacement; the task starts at the
//      later of its workplace's end and the ends of its predecessors already
//      in this station, and must end by C.
// The first prefix task that fits no workplace closes the station; it and
// the rest of the prefix go back to the pool. Empty workplaces are dropped.
//
// If the first task of a fresh station fits nowhere (its zone was outranked
// and the detour overflows C), the lowest-ranked workplace is re-homed to
// the task's zone. Throws InfeasibleTask if even that fails, and
// std::invalid_argument if `order` violates precedence.
[[nodiscard]] BalancingSolution assign(std::span<const TaskIndex> order, const Instance& instance,
                                       const CompletePrecedenceMatrix& precedence,
                                       const DecoderOptions& options = {});

// random_keys -> correct_sequence -> assign, with fitness filled in.
[[nodiscard]] BalancingSolution decode(std::span<const double> position, const Instance& instance,
                                       const CompletePrecedenceMatrix& precedence,
                                       const DecoderOptions& options = {});

}  // namespace mmw
