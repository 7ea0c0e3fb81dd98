#include <doctest.h>

#include "mmw/alb.hpp"
#include "mmw/errors.hpp"
#include "support/fixtures.hpp"

using namespace mmw;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    (void)load_alb(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected ParseError");
  return 0;
}

}  // namespace

TEST_CASE("minimal file") {
  const auto a = load_alb(
      "<number of tasks>\n3\n\n<task times>\n1 1\n2 2\n3 3\n\n<precedence relations>\n1,2\n\n<end>\n");
  CHECK(a.task_count == 3);
  CHECK(a.times == std::vector<Time>{1, 2, 3});
  REQUIRE(a.edges.size() == 1);
  CHECK(a.edges[0] == Edge{0, 1});
  CHECK_FALSE(a.cycle_time.has_value());
}

TEST_CASE("optional sections and sentinel") {
  const auto a = load_alb(
      "<number of tasks>\n2\n<cycle time>\n1000\n<order strength>\n0,5\n<task times>\n1 4\n2 6\n"
      "<precedence relations>\n1,2\n-1,-1\n<end>\n");
  CHECK(a.cycle_time == 1000.0);
  CHECK(a.order_strength == doctest::Approx(0.5));
  CHECK(a.edges.size() == 1);
}

TEST_CASE("malformed input reports the offending line") {
  const std::string head = "<number of tasks>\n2\n<task times>\n";
  CHECK(error_line("<number of tasks>\n2\n<bogus>\n") == 3);
  CHECK(error_line(head + "1 4\n1 5\n") == 5);                                // duplicate time
  CHECK(error_line(head + "1 4\n3 5\n") == 5);                                // id out of range
  CHECK(error_line(head + "1 4\n2 5\n<precedence relations>\n1,7\n") == 7);  // dangling reference
  CHECK(error_line(head + "1 4\n2 5\n<precedence relations>\n2,2\n") == 7);  // self loop
  CHECK(error_line("stray\n<number of tasks>\n2\n") == 1);
  CHECK(error_line(head + "1 4\n2 x\n") == 5);
  CHECK_THROWS_AS((void)load_alb(head + "1 4\n"), ParseError);  // missing time for task 2
  CHECK_THROWS_AS((void)load_alb("<task times>\n1 4\n"), ParseError);
  CHECK(error_line("<number of tasks>\n2\n<number of tasks>\n2\n") == 3);
}

TEST_CASE("bundled fixtures have the benchmark sizes") {
  CHECK(load_alb_file(test::data_file("n20_26_surrogate.alb")).task_count == 20);
  CHECK(load_alb_file(test::data_file("n50_25_surrogate.alb")).task_count == 50);
  CHECK(load_alb_file(test::data_file("n100_34_surrogate.alb")).task_count == 100);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS((void)load_alb_file("/nonexistent/file.alb"), Error);
}
