#include "mmw/objective.hpp"

#include "mmw/errors.hpp"
#include "mmw/solution.hpp"

#include <cmath>
#include <sstream>

namespace mmw {

std::vector<Time> BalancingSolution::workloads() const {
  std::vector<Time> out;
  out.reserve(open_workplaces);
  for (const auto& s : stations) {
    for (const auto& w : s.workplaces) out.push_back(w.workload);
  }
  return out;
}

FitnessValue fitness_from_workloads(std::span<const Time> workloads, Time cycle_time) {
  FitnessValue f;
  double sum_sq = 0.0;
  for (auto t : workloads) {
    if (t > cycle_time + kTimeTolerance) {
      std::ostringstream os;
      os << "workplace workload " << t << " exceeds cycle time " << cycle_time;
      throw InfeasibleWorkload(os.str());
    }
    const auto slack = cycle_time - t;
    sum_sq += slack * slack;
    f.workload += t;
  }
  f.open = workloads.size();
  f.primary = static_cast<double>(f.open) * std::sqrt(sum_sq);
  return f;
}

FitnessValue fitness(const BalancingSolution& solution, Time cycle_time) {
  const auto w = solution.workloads();
  return fitness_from_workloads(w, cycle_time);
}

double smoothness(const BalancingSolution& solution, Time cycle_time) {
  double sum_sq = 0.0;
  for (const auto& s : solution.stations) {
    for (const auto& w : s.workplaces) sum_sq += (cycle_time - w.workload) * (cycle_time - w.workload);
  }
  return std::sqrt(sum_sq);
}

}  // namespace mmw
