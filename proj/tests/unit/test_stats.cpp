#include <doctest.h>

#include "mmw/errors.hpp"
#include "mmw/stats.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace mmw;

TEST_CASE("pooling examples") {
  std::vector<double> v(30);
  std::iota(v.begin(), v.end(), 1.0);
  CHECK(pool_samples(v, 15) == std::vector<double>{8.0, 23.0});
  const std::vector<double> flat(12, 4.25);
  for (auto x : pool_samples(flat, 4)) CHECK(x == 4.25);
  CHECK_THROWS_AS((void)pool_samples(v, 7), PoolError);
  CHECK_THROWS_AS((void)pool_samples(v, 0), PoolError);
}

TEST_CASE("pooling 450 values matches direct group means and keeps the grand mean") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(5000, 300);
  std::vector<double> v(450);
  for (auto& x : v) x = n(rng);
  const auto pooled = pool_samples(v, 15);
  REQUIRE(pooled.size() == 30);
  for (std::size_t g = 0; g < 30; ++g) {
    double s = 0;
    for (std::size_t k = 0; k < 15; ++k) s += v[g * 15 + k];
    CHECK(pooled[g] == doctest::Approx(s / 15).epsilon(1e-14));
  }
  CHECK(mean(pooled) == doctest::Approx(mean(v)).epsilon(1e-14));
}

TEST_CASE("distribution quantiles") {
  // Reference values from an independent statistics package.
  CHECK(student_t_quantile(0.975, 87) == doctest::Approx(1.9876082815890703).epsilon(1e-10));
  CHECK(student_t_quantile(0.975, 12) == doctest::Approx(2.1788128296634177).epsilon(1e-10));
  CHECK(f_quantile(0.95, 2, 87) == doctest::Approx(3.101295756667187).epsilon(1e-10));
  CHECK(f_quantile(0.95, 2, 12) == doctest::Approx(3.885293834652391).epsilon(1e-10));
}

TEST_CASE("three groups of thirty give 2 and 87 degrees of freedom") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0, 1);
  std::vector<std::vector<double>> groups(3, std::vector<double>(30));
  for (auto& g : groups)
    for (auto& x : g) x = n(rng);
  const auto r = one_way_anova(groups);
  CHECK(r.df_between == 2);
  CHECK(r.df_within == 87);
  CHECK(r.f_critical == doctest::Approx(3.101295756667187).epsilon(1e-10));
  CHECK(r.ss_total == doctest::Approx(r.ss_between + r.ss_within).epsilon(1e-6));
}

TEST_CASE("textbook dataset") {
  // Group sums 26, 46, 48; SS_between = 296/5, SS_within = 304/5, F = 111/19
  // (exact rational arithmetic).
  const std::vector<std::vector<double>> g{{6, 8, 4, 5, 3}, {8, 12, 9, 11, 6}, {13, 9, 11, 8, 7}};
  const auto r = one_way_anova(g);
  CHECK(std::abs(r.f_calculated - 111.0 / 19.0) <= 1e-9);
  CHECK(r.ss_between == doctest::Approx(296.0 / 5).epsilon(1e-12));
  CHECK(r.ss_within == doctest::Approx(304.0 / 5).epsilon(1e-12));
  CHECK(r.df_within == 12);
  CHECK(r.pooled_sd == doctest::Approx(std::sqrt(304.0 / 5 / 12)).epsilon(1e-12));
  for (auto h : r.ci_half_widths)
    CHECK(h == doctest::Approx(2.1788128296634177 * std::sqrt(304.0 / 60) / std::sqrt(5.0)).epsilon(1e-9));
  CHECK(r.significant());
  CHECK(r.significant_at(kPublishedFReference));
}

TEST_CASE("identical groups give F = 0") {
  const std::vector<std::vector<double>> g{{1, 2, 3}, {1, 2, 3}, {1, 2, 3}};
  const auto r = one_way_anova(g);
  CHECK(r.f_calculated == 0.0);
  CHECK_FALSE(r.significant());
}

TEST_CASE("zero within variance with distinct means is flagged infinite") {
  const std::vector<std::vector<double>> g{{1, 1}, {2, 2}};
  const auto r = one_way_anova(g);
  CHECK(r.f_infinite);
  CHECK(r.significant());
}

TEST_CASE("F is invariant to translation and positive scaling") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n(10, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<double>> g(3, std::vector<double>(30));
    for (std::size_t k = 0; k < 3; ++k)
      for (auto& x : g[k]) x = n(rng) + 0.5 * static_cast<double>(k);
    const double base = one_way_anova(g).f_calculated;
    auto shifted = g;
    auto scaled = g;
    for (auto& grp : shifted)
      for (auto& x : grp) x += 1234.5;
    for (auto& grp : scaled)
      for (auto& x : grp) x *= 3.75;
    CHECK(std::abs(one_way_anova(shifted).f_calculated - base) <= 1e-9 * std::max(1.0, base));
    CHECK(std::abs(one_way_anova(scaled).f_calculated - base) <= 1e-9 * std::max(1.0, base));
  }
}

TEST_CASE("anova preconditions") {
  CHECK_THROWS_AS((void)one_way_anova({{1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS((void)one_way_anova({{1, 2}, {3}}), std::invalid_argument);
}
