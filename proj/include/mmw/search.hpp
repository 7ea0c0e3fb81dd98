#pragma once

#include "mmw/objective.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace mmw {

// Box-bounded continuous search space.
struct SearchSpace {
  std::vector<double> lower;
  std::vector<double> upper;

  // Default box [-100, 100]^dims.
  [[nodiscard]] static SearchSpace uniform(std::size_t dims, double lo = -100.0, double hi = 100.0);

  [[nodiscard]] std::size_t dims() const noexcept { return lower.size(); }

  // Throws InvalidConfig unless lower < upper in every dimension.
  void validate() const;

  void clamp(std::span<double> x) const noexcept {
    for (std::size_t d = 0; d < x.size(); ++d) x[d] = std::min(std::max(x[d], lower[d]), upper[d]);
  }

  [[nodiscard]] bool contains(std::span<const double> x) const noexcept {
    for (std::size_t d = 0; d < x.size(); ++d) {
      if (!(x[d] >= lower[d] && x[d] <= upper[d])) return false;
    }
    return true;
  }
};

// Evaluates a position. Must be pure: equal positions give equal values.
using Evaluator = std::function<FitnessValue(std::span<const double>)>;

struct TraceRecord {
  std::size_t iteration = 0;
  FitnessValue best;
  double school_weight = std::numeric_limits<double>::quiet_NaN();  // FSS only
  double step_ind = std::numeric_limits<double>::quiet_NaN();
  double step_vol = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
};

struct OptimizationResult {
  std::vector<double> best_position;
  FitnessValue best;
  std::vector<TraceRecord> trace;  // one record per completed iteration
  std::size_t evaluations = 0;
};

}  // namespace mmw
