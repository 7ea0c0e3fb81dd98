#pragma once

#include <span>
#include <vector>

namespace mmw {

// Means of consecutive disjoint groups in input order. Throws PoolError
// unless the length is a positive multiple of group_size.
[[nodiscard]] std::vector<double> pool_samples(std::span<const double> values, std::size_t group_size);

[[nodiscard]] double mean(std::span<const double> values);

// Quantile functions of Student's t and Fisher's F.
[[nodiscard]] double student_t_quantile(double p, double df);
[[nodiscard]] double f_quantile(double p, double df1, double df2);

// Critical value reported alongside the computed F quantile; it does not
// correspond to F(0.95; 2, 87), so both verdicts are kept.
inline constexpr double kPublishedFReference = 4.89;

struct AnovaResult {
  double f_calculated = 0.0;
  bool f_infinite = false;  // zero within-group variance with unequal means
  std::size_t df_between = 0;
  std::size_t df_within = 0;
  std::vector<double> group_means;
  double grand_mean = 0.0;
  double ss_between = 0.0;
  double ss_within = 0.0;
  double ss_total = 0.0;
  double ms_between = 0.0;
  double ms_within = 0.0;
  double pooled_sd = 0.0;
  std::vector<double> ci_half_widths;  // t(1-a/2, df_within) * pooled_sd / sqrt(n_i)
  double f_critical = 0.0;              // F(confidence; df_between, df_within)

  [[nodiscard]] bool significant() const noexcept { return f_infinite || f_calculated > f_critical; }
  [[nodiscard]] bool significant_at(double f_ref) const noexcept { return f_infinite || f_calculated > f_ref; }
};

// One-way ANOVA with pooled-standard-deviation confidence intervals. Needs
// at least two groups of at least two samples (std::invalid_argument).
[[nodiscard]] AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups, double confidence = 0.95);

}  // namespace mmw
