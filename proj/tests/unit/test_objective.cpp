#include <doctest.h>

#include "mmw/errors.hpp"
#include "mmw/objective.hpp"
#include "mmw/solution.hpp"

#include <cmath>
#include <random>

using namespace mmw;

namespace {

BalancingSolution from_workloads(const std::vector<std::vector<Time>>& stations) {
  BalancingSolution s;
  for (const auto& loads : stations) {
    Workstation st;
    for (auto t : loads) {
      Workplace w;
      w.workload = t;
      st.workplaces.push_back(w);
      ++s.open_workplaces;
      s.total_workload += t;
    }
    s.stations.push_back(st);
  }
  return s;
}

}  // namespace

TEST_CASE("fitness examples") {
  const std::vector<Time> full{10};
  CHECK(fitness_from_workloads(full, 10).primary == 0.0);
  const std::vector<Time> two_full{10, 10};
  CHECK(fitness_from_workloads(two_full, 10).primary == 0.0);
  const std::vector<Time> uneven{10, 6};
  const auto f = fitness_from_workloads(uneven, 10);
  CHECK(f.primary == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(f.workload == 16.0);
  CHECK(f.open == 2);
}

TEST_CASE("overloaded workplace is rejected") {
  const std::vector<Time> over{10.5};
  CHECK_THROWS_AS((void)fitness_from_workloads(over, 10), InfeasibleWorkload);
  const std::vector<Time> edge{10 + 1e-10};
  CHECK_NOTHROW((void)fitness_from_workloads(edge, 10));
}

TEST_CASE("fitness equals m times the Euclidean norm of the idle vector") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1000.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Time> t(1 + trial % 20);
    for (auto& x : t) x = u(rng);
    double sum_sq = 0.0;
    for (auto x : t) sum_sq += (1000.0 - x) * (1000.0 - x);
    const double expected = static_cast<double>(t.size()) * std::sqrt(sum_sq);
    CHECK(fitness_from_workloads(t, 1000).primary == doctest::Approx(expected).epsilon(1e-12));

    auto shuffled = t;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(fitness_from_workloads(shuffled, 1000).primary == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("fitness and smoothness of a solution") {
  const auto s = from_workloads({{10, 6}, {7}});
  const auto f = fitness(s, 10);
  CHECK(f.open == 3);
  CHECK(f.workload == 23);
  CHECK(f.primary == doctest::Approx(3 * 5.0).epsilon(1e-12));
  CHECK(smoothness(s, 10) == doctest::Approx(5.0).epsilon(1e-12));
  const auto reordered = from_workloads({{7}, {6, 10}});
  CHECK(fitness(reordered, 10).primary == doctest::Approx(f.primary).epsilon(1e-12));
}

TEST_CASE("better examples") {
  CHECK(better({100, 50, 1}, {200, 10, 1}));
  CHECK_FALSE(better({200, 10, 1}, {100, 50, 1}));
  CHECK(better({100, 40, 1}, {100, 50, 1}));
  CHECK_FALSE(better({100, 50, 1}, {100, 50, 1}));
  CHECK_FALSE(better({100 - 1e-10, 50, 1}, {100, 50, 1}));
  CHECK(better({100 + 1e-10, 40, 1}, {100, 50, 1}));
}

TEST_CASE("better is a strict partial order") {
  std::mt19937_64 rng(3);
  // Coarse values so ties on both tiers actually occur.
  std::uniform_int_distribution<int> v(0, 4);
  auto draw = [&] { return FitnessValue{static_cast<double>(v(rng)), static_cast<double>(v(rng)), 1}; };
  for (int trial = 0; trial < 5000; ++trial) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    CHECK_FALSE(better(a, a));
    if (better(a, b)) CHECK_FALSE(better(b, a));
    if (better(a, b) && better(b, c)) CHECK(better(a, c));
  }
}

TEST_CASE("improvement is positive when fitness drops") {
  CHECK(improvement({10, 0, 1}, {4, 0, 1}) == 6.0);
  CHECK(improvement({4, 0, 1}, {10, 0, 1}) == -6.0);
}
