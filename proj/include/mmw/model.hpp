#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mmw {

// Durations are abstract time units. Table entries can be fractional, so
// everything is double with an absolute comparison tolerance.
using Time = double;
inline constexpr Time kTimeTolerance = 1e-9;

// Tasks are addressed by 0-based index everywhere inside the library. The
// 1-based ids of .alb files and manifests only exist at the I/O boundary.
using TaskIndex = std::size_t;

// Work zones of a workstation laid out on a 3x3 grid around the product.
// Zone 4 is the interior of the product.
using Zone = int;
inline constexpr int kZoneCount = 9;
inline constexpr Zone kInteriorZone = 4;

[[nodiscard]] constexpr bool is_valid_zone(Zone z) noexcept {
  return z >= 0 && z < kZoneCount;
}

struct Task {
  Time base_time = 0.0;
  Zone zone = 0;
};

// Direct precedence: `before` must be finished before `after` starts.
struct Edge {
  TaskIndex before = 0;
  TaskIndex after = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Time an operator needs to walk from one zone to another. Rows are origin
// zones, columns destination zones.
class DisplacementMatrix {
 public:
  using Table = std::array<std::array<Time, kZoneCount>, kZoneCount>;

  // Throws InvalidInstance unless the diagonal is zero, the matrix is
  // symmetric and non-negative, and the interior zone row/column is zero.
  explicit DisplacementMatrix(const Table& cost);

  // Displacement times used for all generated benchmark lines.
  [[nodiscard]] static DisplacementMatrix standard();

  [[nodiscard]] Time operator()(Zone from, Zone to) const {
    return cost_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
  }

  [[nodiscard]] const Table& table() const noexcept { return cost_; }

  friend bool operator==(const DisplacementMatrix&, const DisplacementMatrix&) = default;

 private:
  Table cost_{};
};

[[nodiscard]] inline Time displacement_time(const DisplacementMatrix& m, Zone from, Zone to) {
  return m(from, to);
}

// The single-model balancing problem handed to the solver.
class Instance {
 public:
  // Validates: cycle_time > 0, 1 <= max_workplaces <= 8, every task has a
  // valid zone and 0 <= base_time <= cycle_time, edges reference existing
  // tasks, and the precedence graph is acyclic. Throws InvalidInstance.
  Instance(std::string name, std::vector<Task> tasks, std::vector<Edge> edges, Time cycle_time,
           DisplacementMatrix displacement, std::size_t max_workplaces);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] std::size_t size() const noexcept { return tasks_.size(); }
  [[nodiscard]] const std::vector<Task>& tasks() const noexcept { return tasks_; }
  [[nodiscard]] const Task& task(TaskIndex i) const { return tasks_.at(i); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] Time cycle_time() const noexcept { return cycle_time_; }
  [[nodiscard]] const DisplacementMatrix& displacement() const noexcept { return displacement_; }
  [[nodiscard]] std::size_t max_workplaces() const noexcept { return max_workplaces_; }

  [[nodiscard]] Time total_base_time() const noexcept;

  // ceil(total base time / C): no line can use fewer workplaces.
  [[nodiscard]] std::size_t workplace_lower_bound() const noexcept;

 private:
  std::string name_;
  std::vector<Task> tasks_;
  std::vector<Edge> edges_;
  Time cycle_time_;
  DisplacementMatrix displacement_;
  std::size_t max_workplaces_;
};

inline constexpr std::size_t kMaxWorkplacesLimit = 8;

// Mixed-model description prior to the mean-model reduction.
//   model_times[j][m]  duration of task j on model m
//   incidence[j][m]    1 iff task j is performed on model m
//   plan[m]            demanded units of model m
struct MixedModelSpec {
  std::vector<std::vector<Time>> model_times;
  std::vector<std::vector<std::uint8_t>> incidence;
  std::vector<unsigned> plan;
  std::vector<std::vector<Edge>> per_model_precedence;

  [[nodiscard]] std::size_t task_count() const noexcept { return model_times.size(); }
  [[nodiscard]] std::size_t model_count() const noexcept { return plan.size(); }

  // Throws InvalidInstance on shape mismatches, negative durations,
  // non-binary incidence, or plan entries below 1 (EmptyPlan if the plan
  // itself is empty).
  void validate() const;
};

struct MeanModel {
  std::vector<Time> mean_times;
  std::vector<Edge> joint_edges;  // sorted, duplicate free
};

// Demand-weighted virtual model: mean_times[j] = sum_m share_m * t_jm * a_jm
// with share_m = plan[m] / sum(plan). The joint graph is the union of all
// per-model graphs. Throws EmptyPlan or JointPrecedenceCycle.
[[nodiscard]] MeanModel build_mean_model(const MixedModelSpec& spec);

// True iff the edges over `n` tasks contain no directed cycle.
[[nodiscard]] bool is_acyclic(std::size_t n, const std::vector<Edge>& edges);

}  // namespace mmw
