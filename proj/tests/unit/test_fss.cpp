#include <doctest.h>

#include "mmw/errors.hpp"
#include "mmw/fss.hpp"

#include <cmath>
#include <random>

using namespace mmw;

namespace {

FitnessValue sphere(std::span<const double> x) {
  double s = 0.0;
  for (auto v : x) s += v * v;
  return {s, 0.0, 1};
}

School random_school(std::size_t fish, std::size_t dims, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(-50, 50);
  std::uniform_real_distribution<double> w(1, 1000);
  School s;
  for (std::size_t i = 0; i < fish; ++i) {
    Fish f;
    f.position.resize(dims);
    f.delta_x.resize(dims);
    for (auto& x : f.position) x = pos(rng);
    for (auto& x : f.delta_x) x = pos(rng) / 10;
    f.delta_f = pos(rng);
    f.improved = f.delta_f > 0;
    f.weight = w(rng);
    s.fish.push_back(f);
  }
  return s;
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("step decay is linear and floored") {
  double step = 20.0;
  for (int t = 1; t <= 500; ++t) {
    step = decay_step(step, 20.0, 500);
    CHECK(step == doctest::Approx(20.0 - 0.04 * t).epsilon(1e-9));
  }
  CHECK(step == doctest::Approx(0.0).epsilon(1e-9));
  for (int t = 0; t < 10; ++t) {
    step = decay_step(step, 20.0, 500);
    CHECK(step >= 0.0);
  }
}

TEST_CASE("alpha schedule") {
  CHECK(alpha_schedule(0) == 0.8);
  // 0.8 * exp(-0.7), evaluated independently.
  CHECK(alpha_schedule(100) == doctest::Approx(0.39726824303312763).epsilon(1e-14));
  for (std::size_t t = 1; t < 600; ++t) CHECK(alpha_schedule(t) < alpha_schedule(t - 1));
}

TEST_CASE("feeding") {
  std::mt19937_64 rng(2);
  SUBCASE("no change without fitness gain") {
    auto s = random_school(5, 3, rng);
    for (auto& f : s.fish) f.delta_f = 0;
    const auto before = s;
    feeding(s, 1000);
    for (std::size_t i = 0; i < 5; ++i) CHECK(s.fish[i].weight == before.fish[i].weight);
  }
  SUBCASE("normalised by the largest change") {
    School s;
    s.fish.resize(2);
    s.fish[0].weight = 10;
    s.fish[0].delta_f = 4;
    s.fish[1].weight = 10;
    s.fish[1].delta_f = -2;
    feeding(s, 1000);
    CHECK(s.fish[0].weight == 11.0);
    CHECK(s.fish[1].weight == 9.5);
  }
  SUBCASE("matches the direct formula with clamping") {
    for (int trial = 0; trial < 200; ++trial) {
      auto s = random_school(8, 2, rng);
      if (trial % 3 == 0) s.fish[0].weight = 1.2;
      if (trial % 3 == 1) s.fish[0].weight = 999.7;
      double max_abs = 0;
      for (const auto& f : s.fish) max_abs = std::max(max_abs, std::abs(f.delta_f));
      const auto before = s;
      feeding(s, 1000);
      for (std::size_t i = 0; i < s.fish.size(); ++i) {
        const double expected = std::min(1000.0, std::max(1.0, before.fish[i].weight + before.fish[i].delta_f / max_abs));
        CHECK(s.fish[i].weight == doctest::Approx(expected).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("instinctive direction") {
  std::mt19937_64 rng(9);
  SUBCASE("nobody moved") {
    auto s = random_school(4, 3, rng);
    for (auto& f : s.fish) {
      f.delta_f = 0;
      std::fill(f.delta_x.begin(), f.delta_x.end(), 0.0);
    }
    const auto before = s;
    collective_instinctive(s, SearchSpace::uniform(3), false);
    for (std::size_t i = 0; i < 4; ++i) CHECK(s.fish[i].position == before.fish[i].position);
  }
  SUBCASE("a single mover sets the drift") {
    auto s = random_school(4, 3, rng);
    for (auto& f : s.fish) f.delta_f = 0;
    s.fish[2].delta_f = 123.0;
    const auto drift = instinctive_direction(s, false);
    for (std::size_t d = 0; d < 3; ++d) CHECK(drift[d] == doctest::Approx(s.fish[2].delta_x[d]).epsilon(1e-12));
  }
  SUBCASE("weighted mean over all fish or improvers") {
    for (int trial = 0; trial < 100; ++trial) {
      const auto s = random_school(6, 4, rng);
      for (bool improvers : {false, true}) {
        std::vector<double> num(4, 0.0);
        double den = 0.0;
        for (const auto& f : s.fish) {
          if (improvers && !f.improved) continue;
          for (std::size_t d = 0; d < 4; ++d) num[d] += f.delta_x[d] * f.delta_f;
          den += f.delta_f;
        }
        const auto drift = instinctive_direction(s, improvers);
        for (std::size_t d = 0; d < 4; ++d) {
          const double expected = std::abs(den) <= 1e-12 ? 0.0 : num[d] / den;
          CHECK(drift[d] == doctest::Approx(expected).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("barycenter") {
  std::mt19937_64 rng(12);
  auto s = random_school(5, 3, rng);
  for (auto& f : s.fish) f.weight = 7;
  const auto b = barycenter(s);
  for (std::size_t d = 0; d < 3; ++d) {
    double c = 0;
    for (const auto& f : s.fish) c += f.position[d] / 5;
    CHECK(b[d] == doctest::Approx(c).epsilon(1e-12));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = random_school(7, 3, rng);
    const auto bc = barycenter(r);
    for (std::size_t d = 0; d < 3; ++d) {
      double lo = 1e300, hi = -1e300;
      for (const auto& f : r.fish) {
        lo = std::min(lo, f.position[d]);
        hi = std::max(hi, f.position[d]);
      }
      CHECK(bc[d] >= lo - 1e-12);
      CHECK(bc[d] <= hi + 1e-12);
    }
  }
}

TEST_CASE("collective volitive") {
  std::mt19937_64 rng(21);
  const auto space = SearchSpace::uniform(3);
  SUBCASE("a lone fish sits on its barycenter") {
    auto s = random_school(1, 3, rng);
    const auto before = s.fish[0].position;
    collective_volitive(s, space, 20, 0.0, false, {1, 0});
    CHECK(s.fish[0].position == before);
  }
  SUBCASE("attraction never increases the distance to the barycenter") {
    for (int trial = 0; trial < 100; ++trial) {
      auto s = random_school(10, 3, rng);
      const auto b = barycenter(s);
      const auto before = s;
      collective_volitive(s, space, 5, 0.0, trial % 2 == 0, {static_cast<std::uint64_t>(trial), 0});
      for (std::size_t i = 0; i < s.fish.size(); ++i) {
        CHECK(distance(s.fish[i].position, b) <= distance(before.fish[i].position, b) + 1e-9);
      }
    }
  }
  SUBCASE("no weight gain disperses") {
    auto s = random_school(10, 3, rng);
    const auto b = barycenter(s);
    const auto before = s;
    collective_volitive(s, space, 5, s.total_weight(), false, {3, 0});
    std::size_t farther = 0;
    for (std::size_t i = 0; i < s.fish.size(); ++i) {
      farther += distance(s.fish[i].position, b) >= distance(before.fish[i].position, b) - 1e-12 ? 1 : 0;
    }
    CHECK(farther == s.fish.size());
  }
}

TEST_CASE("individual move acceptance") {
  const auto space = SearchSpace::uniform(2);
  auto worse_everywhere = [](std::span<const double> x) {
    return FitnessValue{x[0] == 0.0 && x[1] == 0.0 ? 0.0 : 1.0, 0.0, 1};
  };
  School s;
  Fish f;
  f.position = {0.0, 0.0};
  f.delta_x = {0.0, 0.0};
  f.fitness = {0.0, 0.0, 1};
  s.fish.assign(4, f);
  SUBCASE("vanilla rejects worsening moves") {
    individual_move(s, space, worse_everywhere, 5.0, 0.0, false, true, {1, 0});
    for (const auto& x : s.fish) {
      CHECK(x.position == std::vector<double>{0.0, 0.0});
      CHECK(x.delta_f == 0.0);
      CHECK(x.delta_x == std::vector<double>{0.0, 0.0});
    }
  }
  SUBCASE("alpha 1 always moves and marks no improvement") {
    individual_move(s, space, worse_everywhere, 5.0, 1.0, true, true, {1, 0});
    for (const auto& x : s.fish) {
      CHECK(x.position != std::vector<double>{0.0, 0.0});
      CHECK_FALSE(x.improved);
      CHECK(x.delta_f == -1.0);
    }
  }
}

TEST_CASE("run_fss invariants on a sphere") {
  FssConfig c;
  c.population = 30;
  c.iterations = 100;
  c.seed = 5;
  const auto space = SearchSpace::uniform(2);
  bool bounds_ok = true;
  const auto r = run_fss(c, space, sphere, [&](FssPhase, std::size_t, const School& s) {
    for (const auto& f : s.fish) {
      bounds_ok &= f.weight >= 1.0 && f.weight <= c.w_scale;
      bounds_ok &= space.contains(f.position);
    }
  });
  CHECK(bounds_ok);
  REQUIRE(r.trace.size() == 101);
  for (std::size_t t = 1; t < r.trace.size(); ++t) CHECK_FALSE(better(r.trace[t - 1].best, r.trace[t].best));
  CHECK(r.trace.back().best.primary < r.trace.front().best.primary);
  CHECK(r.evaluations == 30 * (1 + 2 * 100));
  CHECK(sphere(r.best_position).primary == r.best.primary);
}

TEST_CASE("run_fss with zero iterations returns the best initial fish") {
  FssConfig c;
  c.iterations = 0;
  c.seed = 8;
  std::vector<double> best_initial;
  const auto r = run_fss(c, SearchSpace::uniform(3), sphere, [&](FssPhase p, std::size_t, const School& s) {
    if (p != FssPhase::Initial) return;
    double best = 1e300;
    for (const auto& f : s.fish) {
      if (f.fitness.primary < best) {
        best = f.fitness.primary;
        best_initial = f.position;
      }
    }
  });
  CHECK(r.trace.size() == 1);
  CHECK(r.best_position == best_initial);
}

TEST_CASE("run_fss is reproducible and SAR with alpha 0 equals vanilla") {
  FssConfig c;
  c.iterations = 60;
  c.seed = 77;
  const auto space = SearchSpace::uniform(5);
  const auto a = run_fss(c, space, sphere);
  const auto b = run_fss(c, space, sphere);
  auto sar = c;
  sar.sar_enabled = true;
  sar.alpha0 = 0.0;
  const auto s = run_fss(sar, space, sphere);
  REQUIRE(a.trace.size() == b.trace.size());
  REQUIRE(a.trace.size() == s.trace.size());
  for (std::size_t t = 0; t < a.trace.size(); ++t) {
    CHECK(a.trace[t].best.primary == b.trace[t].best.primary);
    CHECK(a.trace[t].best.primary == s.trace[t].best.primary);
    CHECK(a.trace[t].school_weight == s.trace[t].school_weight);
  }
  CHECK(a.best_position == s.best_position);
}

TEST_CASE("config validation") {
  FssConfig c;
  CHECK_NOTHROW(c.validate());
  c.w_scale = 1.0;
  CHECK_THROWS_AS(c.validate(), InvalidConfig);
  c = {};
  c.step_ind_initial = 0;
  CHECK_THROWS_AS(c.validate(), InvalidConfig);
  c = {};
  c.alpha0 = 1.5;
  CHECK_THROWS_AS(c.validate(), InvalidConfig);
  c = {};
  c.population = 0;
  CHECK_THROWS_AS(c.validate(), InvalidConfig);
}

TEST_CASE("a short run can follow a longer decay schedule") {
  FssConfig c;
  c.iterations = 10;
  c.decay_horizon = 500;
  c.seed = 2;
  const auto r = run_fss(c, SearchSpace::uniform(2), sphere);
  REQUIRE(r.trace.size() == 11);
  for (const auto& rec : r.trace) {
    CHECK(rec.step_ind == doctest::Approx(20.0 - 0.04 * static_cast<double>(rec.iteration)).epsilon(1e-12));
    CHECK(rec.alpha == 0.0);
  }
  c.decay_horizon = 0;
  const auto full = run_fss(c, SearchSpace::uniform(2), sphere);
  CHECK(full.trace.back().step_ind == doctest::Approx(0.0).epsilon(1e-12));
}
