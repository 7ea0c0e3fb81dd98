#pragma once

#include "mmw/decoder.hpp"
#include "mmw/solution.hpp"

#include <string>
#include <vector>

namespace mmw {

struct ValidationReport {
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

// Checks a solution against the instance without reusing any of the
// decoder's feasibility logic: task coverage, workplace cap, time
// bookkeeping, cycle time, displacement charges, precedence across and
// within stations, and the reported totals and fitness.
[[nodiscard]] ValidationReport validate_solution(const Instance& instance, const BalancingSolution& solution,
                                                 DisplacementMode mode = DisplacementMode::HomeZone);

}  // namespace mmw
