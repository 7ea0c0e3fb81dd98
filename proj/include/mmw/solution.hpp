#pragma once

#include "mmw/model.hpp"
#include "mmw/objective.hpp"

#include <vector>

namespace mmw {

struct ScheduledTask {
  TaskIndex task = 0;
  std::size_t station = 0;
  Zone workplace_zone = 0;
  Time start = 0.0;  // station-local clock
  Time end = 0.0;
  Time corrected_duration = 0.0;  // base time + displacement_added
  Time displacement_added = 0.0;
};

// One operator position inside a workstation, anchored at its home zone.
struct Workplace {
  Zone zone = 0;
  std::vector<ScheduledTask> tasks;  // in start order
  Time workload = 0.0;               // sum of corrected durations
  Time idle = 0.0;                   // waiting before and between tasks

  [[nodiscard]] Time end() const noexcept { return tasks.empty() ? 0.0 : tasks.back().end; }
};

struct Workstation {
  std::vector<Workplace> workplaces;
};

struct BalancingSolution {
  std::vector<Workstation> stations;
  std::size_t open_workplaces = 0;
  Time total_workload = 0.0;
  FitnessValue fitness;

  [[nodiscard]] std::vector<Time> workloads() const;
};

}  // namespace mmw
