#include "mmw/decoder.hpp"

#include "mmw/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mmw {

std::string_view to_string(DisplacementMode mode) noexcept {
  switch (mode) {
    case DisplacementMode::HomeZone:
      return "home_zone";
    case DisplacementMode::PreviousTask:
      return "previous_task";
  }
  return "home_zone";
}

DisplacementMode displacement_mode_from_string(std::string_view text) {
  if (text == "home_zone") return DisplacementMode::HomeZone;
  if (text == "previous_task") return DisplacementMode::PreviousTask;
  throw InvalidConfig("unknown displacement mode '" + std::string(text) + "'");
}

std::vector<TaskIndex> random_keys(std::span<const double> position) {
  const auto n = position.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(position[i])) {
      throw InvalidPosition("position coordinate " + std::to_string(i) + " is NaN");
    }
  }
  std::vector<std::size_t> by_value(n);
  std::iota(by_value.begin(), by_value.end(), std::size_t{0});
  std::stable_sort(by_value.begin(), by_value.end(),
                   [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
  std::vector<TaskIndex> ranks(n);
  for (std::size_t r = 0; r < n; ++r) ranks[by_value[r]] = r;
  return ranks;
}

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

class LineBuilder {
 public:
  LineBuilder(const Instance& instance, const CompletePrecedenceMatrix& precedence,
              const DecoderOptions& options)
      : instance_(instance),
        precedence_(precedence),
        options_(options),
        station_of_(instance.size(), kUnassigned),
        end_of_(instance.size(), 0.0) {}

  BalancingSolution build(std::span<const TaskIndex> order) {
    const auto n = instance_.size();
    if (order.size() != n) throw std::invalid_argument("order length differs from task count");

    std::size_t next = 0;
    while (next < n) {
      next = fill_station(order, next);
    }

    solution_.open_workplaces = 0;
    solution_.total_workload = 0.0;
    for (const auto& s : solution_.stations) {
      solution_.open_workplaces += s.workplaces.size();
      for (const auto& w : s.workplaces) solution_.total_workload += w.workload;
    }
    return std::move(solution_);
  }

 private:
  const Instance& instance_;
  const CompletePrecedenceMatrix& precedence_;
  const DecoderOptions& options_;
  std::vector<std::size_t> station_of_;
  std::vector<Time> end_of_;
  BalancingSolution solution_;

  // Opens one station starting at order[first]; returns the index of the
  // first task left for the next station.
  std::size_t fill_station(std::span<const TaskIndex> order, std::size_t first) {
    const auto capacity = static_cast<Time>(instance_.max_workplaces()) * instance_.cycle_time();

    // Step 1: longest prefix within max_workplaces * C.
    std::size_t stop = first;
    Time prefix_time = 0.0;
    std::array<Time, kZoneCount> zone_time{};
    std::array<bool, kZoneCount> zone_present{};
    while (stop < order.size()) {
      const auto& t = instance_.task(order[stop]);
      if (prefix_time + t.base_time > capacity + kTimeTolerance) break;
      prefix_time += t.base_time;
      zone_time[static_cast<std::size_t>(t.zone)] += t.base_time;
      zone_present[static_cast<std::size_t>(t.zone)] = true;
      ++stop;
    }

    // Steps 2-3: rank zones and open the top ones.
    std::vector<Zone> ranked;
    for (Zone z = 0; z < kZoneCount; ++z) {
      if (zone_present[static_cast<std::size_t>(z)]) ranked.push_back(z);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [&](Zone a, Zone b) {
      return zone_time[static_cast<std::size_t>(a)] > zone_time[static_cast<std::size_t>(b)];
    });
    ranked.resize(std::min(ranked.size(), instance_.max_workplaces()));

    const auto station_index = solution_.stations.size();
    Workstation station;
    for (auto z : ranked) station.workplaces.push_back(Workplace{z, {}, 0.0, 0.0});

    std::size_t p = first;
    for (; p < stop; ++p) {
      const auto task = order[p];
      if (try_place(station, station_index, task)) continue;
      if (p != first) break;
      // Fresh station and its very first task fits nowhere: re-home the
      // lowest-ranked workplace to the task's zone.
      station.workplaces.back().zone = instance_.task(task).zone;
      if (!try_place(station, station_index, task)) {
        throw InfeasibleTask(task + 1, "task " + std::to_string(task + 1) +
                                           " does not fit in an empty workstation");
      }
    }

    std::erase_if(station.workplaces, [](const Workplace& w) { return w.tasks.empty(); });
    for (auto& w : station.workplaces) {
      Time clock = 0.0;
      w.idle = 0.0;
      for (const auto& st : w.tasks) {
        w.idle += st.start - clock;
        clock = st.end;
      }
    }
    solution_.stations.push_back(std::move(station));
    return p;
  }

  Time displacement_for(const Workplace& w, Zone task_zone) const {
    Zone origin = w.zone;
    if (options_.displacement == DisplacementMode::PreviousTask && !w.tasks.empty()) {
      origin = instance_.task(w.tasks.back().task).zone;
    }
    return instance_.displacement()(origin, task_zone);
  }

  bool try_place(Workstation& station, std::size_t station_index, TaskIndex task) {
    const auto& t = instance_.task(task);

    Time ready = 0.0;
    for (auto pred : precedence_.predecessors(task)) {
      if (station_of_[pred] == kUnassigned) {
        throw std::invalid_argument("task order violates precedence: task " + std::to_string(pred + 1) +
                                    " must come before task " + std::to_string(task + 1));
      }
      if (station_of_[pred] == station_index) ready = std::max(ready, end_of_[pred]);
    }

    // Candidate order: own zone first, then by displacement, then by zone.
    std::array<std::size_t, kMaxWorkplacesLimit> candidates{};
    std::array<Time, kMaxWorkplacesLimit> cost{};
    const auto count = station.workplaces.size();
    for (std::size_t k = 0; k < count; ++k) {
      candidates[k] = k;
      cost[k] = displacement_for(station.workplaces[k], t.zone);
    }
    std::sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(count),
              [&](std::size_t a, std::size_t b) {
                const auto& wa = station.workplaces[a];
                const auto& wb = station.workplaces[b];
                const bool own_a = wa.zone == t.zone;
                const bool own_b = wb.zone == t.zone;
                if (own_a != own_b) return own_a;
                if (cost[a] != cost[b]) return cost[a] < cost[b];
                return wa.zone < wb.zone;
              });

    for (std::size_t c = 0; c < count; ++c) {
      auto& w = station.workplaces[candidates[c]];
      const auto extra = cost[candidates[c]];
      const auto duration = t.base_time + extra;
      const auto start = std::max(w.end(), ready);
      if (start + duration > instance_.cycle_time() + kTimeTolerance) continue;
      w.tasks.push_back(ScheduledTask{task, station_index, w.zone, start, start + duration, duration, extra});
      w.workload += duration;
      station_of_[task] = station_index;
      end_of_[task] = start + duration;
      return true;
    }
    return false;
  }
};

}  // namespace

BalancingSolution assign(std::span<const TaskIndex> order, const Instance& instance,
                         const CompletePrecedenceMatrix& precedence, const DecoderOptions& options) {
  if (precedence.size() != instance.size()) {
    throw std::invalid_argument("precedence matrix size differs from instance size");
  }
  auto solution = LineBuilder(instance, precedence, options).build(order);
  solution.fitness = fitness(solution, instance.cycle_time());
  return solution;
}

BalancingSolution decode(std::span<const double> position, const Instance& instance,
                         const CompletePrecedenceMatrix& precedence, const DecoderOptions& options) {
  if (position.size() != instance.size()) {
    throw InvalidPosition("position has " + std::to_string(position.size()) + " coordinates, expected " +
                          std::to_string(instance.size()));
  }
  const auto keys = random_keys(position);
  const auto order = correct_sequence(keys, precedence);
  return assign(order, instance, precedence, options);
}

}  // namespace mmw
