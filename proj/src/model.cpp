#include "mmw/model.hpp"

#include "mmw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

namespace mmw {

DisplacementMatrix::DisplacementMatrix(const Table& cost) : cost_(cost) {
  for (std::size_t i = 0; i < kZoneCount; ++i) {
    if (cost_[i][i] != 0.0) {
      throw InvalidInstance("displacement matrix: non-zero diagonal at zone " + std::to_string(i));
    }
    for (std::size_t j = 0; j < kZoneCount; ++j) {
      if (!(cost_[i][j] >= 0.0) || !std::isfinite(cost_[i][j])) {
        throw InvalidInstance("displacement matrix: invalid entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
      if (cost_[i][j] != cost_[j][i]) {
        throw InvalidInstance("displacement matrix: not symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
      if ((i == kInteriorZone || j == kInteriorZone) && cost_[i][j] != 0.0) {
        throw InvalidInstance("displacement matrix: interior zone entries must be zero");
      }
    }
  }
}

DisplacementMatrix DisplacementMatrix::standard() {
  // Displacement times (time units) for the 3x3 zone grid around the
  // product; 13.5 per adjacent move, 54 between opposite corners.
  static const Table kStandard = {{
      {0, 54, 27, 27, 0, 13.5, 13.5, 40.5, 40.5},
      {54, 0, 27, 27, 0, 40.5, 40.5, 13.5, 13.5},
      {27, 27, 0, 54, 0, 13.5, 40.5, 13.5, 40.5},
      {27, 27, 54, 0, 0, 40.5, 13.5, 40.5, 13.5},
      {0, 0, 0, 0, 0, 0, 0, 0, 0},
      {13.5, 40.5, 13.5, 40.5, 0, 0, 27, 27, 54},
      {13.5, 40.5, 40.5, 13.5, 0, 27, 0, 54, 27},
      {40.5, 13.5, 13.5, 40.5, 0, 27, 54, 0, 27},
      {40.5, 13.5, 40.5, 13.5, 0, 54, 27, 27, 0},
  }};
  return DisplacementMatrix(kStandard);
}

bool is_acyclic(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<TaskIndex>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : edges) {
    succ[e.before].push_back(e.after);
    ++indegree[e.after];
  }
  std::queue<TaskIndex> ready;
  for (TaskIndex i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const auto i = ready.front();
    ready.pop();
    ++visited;
    for (auto s : succ[i]) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  return visited == n;
}

Instance::Instance(std::string name, std::vector<Task> tasks, std::vector<Edge> edges,
                   Time cycle_time, DisplacementMatrix displacement, std::size_t max_workplaces)
    : name_(std::move(name)),
      tasks_(std::move(tasks)),
      edges_(std::move(edges)),
      cycle_time_(cycle_time),
      displacement_(displacement),
      max_workplaces_(max_workplaces) {
  if (!(cycle_time_ > 0.0) || !std::isfinite(cycle_time_)) {
    throw InvalidInstance("cycle time must be positive");
  }
  if (max_workplaces_ < 1 || max_workplaces_ > kMaxWorkplacesLimit) {
    throw InvalidInstance("max_workplaces must lie in [1, 8], got " +
                          std::to_string(max_workplaces_));
  }
  for (std::size_t i = 0; i < tasks_.size(); ++i) {
    const auto& t = tasks_[i];
    if (!is_valid_zone(t.zone)) {
      throw InvalidInstance("task " + std::to_string(i + 1) + ": invalid zone " +
                            std::to_string(t.zone));
    }
    if (!(t.base_time >= 0.0) || !std::isfinite(t.base_time)) {
      throw InvalidInstance("task " + std::to_string(i + 1) + ": negative or invalid time");
    }
    if (t.base_time > cycle_time_ + kTimeTolerance) {
      std::ostringstream os;
      os << "task " << i + 1 << ": time " << t.base_time << " exceeds cycle time " << cycle_time_;
      throw InvalidInstance(os.str());
    }
  }
  for (const auto& e : edges_) {
    if (e.before >= tasks_.size() || e.after >= tasks_.size()) {
      throw InvalidInstance("precedence edge references an unknown task");
    }
    if (e.before == e.after) {
      throw InvalidInstance("task " + std::to_string(e.before + 1) + " precedes itself");
    }
  }
  if (!is_acyclic(tasks_.size(), edges_)) {
    throw InvalidInstance("precedence graph contains a cycle");
  }
}

Time Instance::total_base_time() const noexcept {
  return std::accumulate(tasks_.begin(), tasks_.end(), Time{0},
                         [](Time acc, const Task& t) { return acc + t.base_time; });
}

std::size_t Instance::workplace_lower_bound() const noexcept {
  const auto ratio = total_base_time() / cycle_time_;
  // Guard against 5.000000001 style rounding pushing the bound up by one.
  const auto bound = std::ceil(ratio - kTimeTolerance);
  return bound < 1.0 && !tasks_.empty() ? 1 : static_cast<std::size_t>(bound);
}

void MixedModelSpec::validate() const {
  if (plan.empty()) throw EmptyPlan("production plan has no models");
  const auto n = model_times.size();
  const auto models = plan.size();
  if (incidence.size() != n) throw InvalidInstance("incidence row count differs from task count");
  for (std::size_t j = 0; j < n; ++j) {
    if (model_times[j].size() != models || incidence[j].size() != models) {
      throw InvalidInstance("task " + std::to_string(j + 1) + ": model column count mismatch");
    }
    for (std::size_t m = 0; m < models; ++m) {
      if (!(model_times[j][m] >= 0.0)) {
        throw InvalidInstance("task " + std::to_string(j + 1) + ": negative model time");
      }
      if (incidence[j][m] > 1) throw InvalidInstance("incidence must be 0/1");
    }
  }
  for (auto q : plan) {
    if (q < 1) throw InvalidInstance("plan entries must be at least 1");
  }
  if (per_model_precedence.size() != models) {
    throw InvalidInstance("one precedence list per model is required");
  }
  for (const auto& edges : per_model_precedence) {
    for (const auto& e : edges) {
      if (e.before >= n || e.after >= n) throw InvalidInstance("model edge references unknown task");
    }
  }
}

MeanModel build_mean_model(const MixedModelSpec& spec) {
  if (spec.plan.empty()) throw EmptyPlan("production plan has no models");
  const double demand = std::accumulate(spec.plan.begin(), spec.plan.end(), 0.0);
  if (demand <= 0.0) throw EmptyPlan("total demand is zero");
  spec.validate();

  MeanModel out;
  out.mean_times.assign(spec.task_count(), 0.0);
  for (std::size_t j = 0; j < spec.task_count(); ++j) {
    Time acc = 0.0;
    for (std::size_t m = 0; m < spec.model_count(); ++m) {
      if (spec.incidence[j][m] != 0) acc += (spec.plan[m] / demand) * spec.model_times[j][m];
    }
    out.mean_times[j] = acc;
  }

  for (const auto& edges : spec.per_model_precedence) {
    out.joint_edges.insert(out.joint_edges.end(), edges.begin(), edges.end());
  }
  std::sort(out.joint_edges.begin(), out.joint_edges.end());
  out.joint_edges.erase(std::unique(out.joint_edges.begin(), out.joint_edges.end()),
                        out.joint_edges.end());
  for (const auto& e : out.joint_edges) {
    if (e.before == e.after) throw JointPrecedenceCycle("self loop in joint precedence graph");
  }
  if (!is_acyclic(spec.task_count(), out.joint_edges)) {
    throw JointPrecedenceCycle("joint precedence graph contains a cycle");
  }
  return out;
}

}  // namespace mmw
