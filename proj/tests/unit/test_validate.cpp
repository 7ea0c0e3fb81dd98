#include <doctest.h>

#include "mmw/decoder.hpp"
#include "mmw/validate.hpp"
#include "support/fixtures.hpp"

#include <random>

using namespace mmw;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

struct Decoded {
  GeneratedInstance g = test::small_4m();
  BalancingSolution s;
  Decoded() {
    const auto m = CompletePrecedenceMatrix::build(g.instance.size(), g.instance.edges());
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-100, 100);
    std::vector<double> pos(g.instance.size());
    for (auto& x : pos) x = u(rng);
    s = decode(pos, g.instance, m);
  }
};

ScheduledTask* successor_in_same_station(BalancingSolution& s, const Instance& inst) {
  for (auto& st : s.stations)
    for (auto& w : st.workplaces)
      for (auto& t : w.tasks)
        for (const auto& e : inst.edges())
          if (e.after == t.task)
            for (const auto& w2 : st.workplaces)
              for (const auto& p : w2.tasks)
                if (p.task == e.before) return &t;
  return nullptr;
}

}  // namespace

TEST_CASE("decoded solutions validate") {
  Decoded d;
  CHECK(validate_solution(d.g.instance, d.s).ok());
}

TEST_CASE("a shifted start time is reported") {
  Decoded d;
  auto* t = successor_in_same_station(d.s, d.g.instance);
  REQUIRE(t != nullptr);
  t->start = 0.0;
  t->end = t->corrected_duration;
  const auto r = validate_solution(d.g.instance, d.s);
  CHECK_FALSE(r.ok());
  CHECK(mentions(r, "precedence violated"));
}

TEST_CASE("too many workplaces in a station are reported") {
  Decoded d;
  auto& st = d.s.stations[0];
  while (st.workplaces.size() <= d.g.instance.max_workplaces()) {
    Workplace w;
    w.zone = 4;
    st.workplaces.push_back(w);
  }
  CHECK(mentions(validate_solution(d.g.instance, d.s), "exceed the cap"));
}

TEST_CASE("missing and duplicated tasks are reported") {
  Decoded d;
  auto copy = d.s;
  copy.stations[0].workplaces[0].tasks.pop_back();
  CHECK_FALSE(validate_solution(d.g.instance, copy).ok());
  copy = d.s;
  copy.stations[0].workplaces[0].tasks.push_back(copy.stations[0].workplaces[0].tasks.back());
  CHECK_FALSE(validate_solution(d.g.instance, copy).ok());
}

TEST_CASE("wrong displacement, workload and fitness are reported") {
  Decoded d;
  auto copy = d.s;
  copy.stations[0].workplaces[0].tasks[0].displacement_added += 1;
  CHECK_FALSE(validate_solution(d.g.instance, copy).ok());
  copy = d.s;
  copy.stations[0].workplaces[0].workload += 1;
  CHECK_FALSE(validate_solution(d.g.instance, copy).ok());
  copy = d.s;
  copy.fitness.primary *= 0.5;
  CHECK_FALSE(validate_solution(d.g.instance, copy).ok());
  copy = d.s;
  copy.open_workplaces += 1;
  CHECK_FALSE(validate_solution(d.g.instance, copy).ok());
}

TEST_CASE("exceeding the cycle time is reported") {
  Decoded d;
  auto copy = d.s;
  auto& t = copy.stations[0].workplaces[0].tasks.back();
  t.start += d.g.instance.cycle_time();
  t.end += d.g.instance.cycle_time();
  CHECK_FALSE(validate_solution(d.g.instance, copy).ok());
}
