#include "mmw/stats.hpp"

#include "mmw/errors.hpp"

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mmw {

double mean(std::span<const double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

std::vector<double> pool_samples(std::span<const double> values, std::size_t group_size) {
  if (group_size == 0) throw PoolError("group size must be positive");
  if (values.empty() || values.size() % group_size != 0) {
    throw PoolError(std::to_string(values.size()) + " values cannot be split into groups of " +
                    std::to_string(group_size));
  }
  std::vector<double> out;
  out.reserve(values.size() / group_size);
  for (std::size_t g = 0; g < values.size(); g += group_size) out.push_back(mean(values.subspan(g, group_size)));
  return out;
}

double student_t_quantile(double p, double df) {
  return boost::math::quantile(boost::math::students_t_distribution<double>(df), p);
}

double f_quantile(double p, double df1, double df2) {
  return boost::math::quantile(boost::math::fisher_f_distribution<double>(df1, df2), p);
}

AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups, double confidence) {
  if (groups.size() < 2) throw std::invalid_argument("ANOVA needs at least two groups");
  std::size_t total = 0;
  for (const auto& g : groups) {
    if (g.size() < 2) throw std::invalid_argument("each ANOVA group needs at least two samples");
    total += g.size();
  }

  AnovaResult r;
  const auto k = groups.size();
  r.df_between = k - 1;
  r.df_within = total - k;

  double grand_sum = 0.0;
  for (const auto& g : groups) {
    r.group_means.push_back(mean(g));
    grand_sum += std::accumulate(g.begin(), g.end(), 0.0);
  }
  r.grand_mean = grand_sum / static_cast<double>(total);

  for (std::size_t i = 0; i < k; ++i) {
    const auto& g = groups[i];
    const double d = r.group_means[i] - r.grand_mean;
    r.ss_between += static_cast<double>(g.size()) * d * d;
    for (auto x : g) {
      r.ss_within += (x - r.group_means[i]) * (x - r.group_means[i]);
      r.ss_total += (x - r.grand_mean) * (x - r.grand_mean);
    }
  }
  r.ms_between = r.ss_between / static_cast<double>(r.df_between);
  r.ms_within = r.ss_within / static_cast<double>(r.df_within);
  r.pooled_sd = std::sqrt(r.ms_within);

  // Relative floor so that constant groups with round-off noise count as
  // zero variance.
  const double scale = std::max(1.0, r.grand_mean * r.grand_mean);
  if (r.ms_within <= 1e-24 * scale) {
    if (r.ms_between <= 1e-24 * scale) {
      r.f_calculated = 0.0;
    } else {
      r.f_calculated = std::numeric_limits<double>::infinity();
      r.f_infinite = true;
    }
  } else {
    r.f_calculated = r.ms_between / r.ms_within;
  }

  const double alpha = 1.0 - confidence;
  const double t = student_t_quantile(1.0 - alpha / 2.0, static_cast<double>(r.df_within));
  for (const auto& g : groups) {
    r.ci_half_widths.push_back(t * r.pooled_sd / std::sqrt(static_cast<double>(g.size())));
  }
  r.f_critical = f_quantile(confidence, static_cast<double>(r.df_between), static_cast<double>(r.df_within));
  return r;
}

}  // namespace mmw
