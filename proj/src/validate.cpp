#include "mmw/validate.hpp"

#include <cmath>
#include <sstream>

namespace mmw {
namespace {

constexpr double kTol = 1e-6;

bool close(double a, double b) { return std::abs(a - b) <= kTol * std::max(1.0, std::abs(b)); }

// Reachability by depth-first search from every task.
std::vector<std::vector<bool>> reachability(const Instance& instance) {
  const auto n = instance.size();
  std::vector<std::vector<TaskIndex>> succ(n);
  for (const auto& e : instance.edges()) succ[e.before].push_back(e.after);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  std::vector<TaskIndex> stack;
  for (TaskIndex src = 0; src < n; ++src) {
    stack.assign(succ[src].begin(), succ[src].end());
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      if (reach[src][v]) continue;
      reach[src][v] = true;
      stack.insert(stack.end(), succ[v].begin(), succ[v].end());
    }
  }
  return reach;
}

struct Placement {
  std::size_t station = 0;
  Time start = 0.0;
  Time end = 0.0;
  std::size_t seen = 0;
};

}  // namespace

ValidationReport validate_solution(const Instance& instance, const BalancingSolution& solution,
                                   DisplacementMode mode) {
  ValidationReport report;
  auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };
  const auto n = instance.size();
  const auto c = instance.cycle_time();

  std::vector<Placement> where(n);
  std::size_t workplace_count = 0;
  Time workload_sum = 0.0;
  std::vector<Time> workloads;

  for (std::size_t s = 0; s < solution.stations.size(); ++s) {
    const auto& station = solution.stations[s];
    const auto tag = "station " + std::to_string(s + 1);
    if (station.workplaces.size() > instance.max_workplaces()) {
      fail(tag + ": " + std::to_string(station.workplaces.size()) + " workplaces exceed the cap of " +
           std::to_string(instance.max_workplaces()));
    }
    if (station.workplaces.empty()) fail(tag + ": no workplaces");
    for (const auto& w : station.workplaces) {
      ++workplace_count;
      const auto wtag = tag + " zone " + std::to_string(w.zone);
      if (!is_valid_zone(w.zone)) {
        fail(wtag + ": invalid zone");
        continue;
      }
      if (w.tasks.empty()) fail(wtag + ": empty workplace counted as open");
      Time clock = 0.0;
      Time load = 0.0;
      Time gaps = 0.0;
      Zone operator_zone = w.zone;
      for (const auto& t : w.tasks) {
        if (t.task >= n) {
          fail(wtag + ": unknown task id " + std::to_string(t.task + 1));
          continue;
        }
        const auto ttag = wtag + " task " + std::to_string(t.task + 1);
        const auto& task = instance.task(t.task);
        auto& p = where[t.task];
        ++p.seen;
        p.station = s;
        p.start = t.start;
        p.end = t.end;

        const Zone origin = mode == DisplacementMode::PreviousTask ? operator_zone : w.zone;
        const Time expected_extra = instance.displacement()(origin, task.zone);
        operator_zone = task.zone;
        if (!close(t.displacement_added, expected_extra)) {
          std::ostringstream os;
          os << ttag << ": displacement " << t.displacement_added << " but zone change costs " << expected_extra;
          fail(os.str());
        }
        if (!close(t.corrected_duration, task.base_time + t.displacement_added)) {
          fail(ttag + ": corrected duration differs from base time plus displacement");
        }
        if (t.corrected_duration < task.base_time - kTol) fail(ttag + ": corrected duration below base time");
        if (!close(t.end, t.start + t.corrected_duration)) fail(ttag + ": end differs from start + duration");
        if (t.start < -kTol) fail(ttag + ": negative start time");
        if (t.end > c + kTol) fail(ttag + ": ends after the cycle time");
        if (t.start < clock - kTol) fail(ttag + ": overlaps the previous task of its workplace");
        gaps += std::max(0.0, t.start - clock);
        clock = std::max(clock, t.end);
        load += t.corrected_duration;
      }
      if (!close(w.workload, load)) fail(wtag + ": reported workload differs from the sum of durations");
      if (!close(w.idle, gaps)) fail(wtag + ": reported idle time differs from the sum of gaps");
      if (load + gaps > c + kTol) fail(wtag + ": workload plus idle time exceeds the cycle time");
      workload_sum += load;
      workloads.push_back(load);
    }
  }

  for (TaskIndex i = 0; i < n; ++i) {
    if (where[i].seen == 0) fail("task " + std::to_string(i + 1) + " is not assigned");
    if (where[i].seen > 1) fail("task " + std::to_string(i + 1) + " is assigned more than once");
  }

  const auto reach = reachability(instance);
  for (TaskIndex i = 0; i < n; ++i) {
    if (where[i].seen != 1) continue;
    for (TaskIndex j = 0; j < n; ++j) {
      if (!reach[i][j] || where[j].seen != 1) continue;
      const auto& a = where[i];
      const auto& b = where[j];
      const bool ok = a.station < b.station || (a.station == b.station && a.end <= b.start + 1e-9);
      if (!ok) {
        fail("precedence violated: task " + std::to_string(i + 1) + " must finish before task " +
             std::to_string(j + 1) + " starts");
      }
    }
  }

  if (solution.open_workplaces != workplace_count) fail("open_workplaces does not match the workplace count");
  if (!close(solution.total_workload, workload_sum)) fail("total_workload does not match the workplaces");
  double sum_sq = 0.0;
  for (auto t : workloads) sum_sq += (c - t) * (c - t);
  const double primary = static_cast<double>(workloads.size()) * std::sqrt(sum_sq);
  if (!close(solution.fitness.primary, primary) || solution.fitness.open != workloads.size()) {
    fail("reported fitness does not match the workplaces");
  }
  return report;
}

}  // namespace mmw
