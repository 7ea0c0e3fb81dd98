#pragma once

#include "mmw/model.hpp"

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

namespace mmw {

// Contents of a SALBP .alb benchmark file.
struct AlbInstance {
  std::size_t task_count = 0;
  std::vector<Time> times;  // indexed by task
  std::vector<Edge> edges;  // direct precedence, file order
  std::optional<Time> cycle_time;
  std::optional<double> order_strength;
};

// Parses the plain-text section format:
//
//   <number of tasks>      task count
//   <cycle time>           optional
//   <order strength>       optional, decimal comma accepted
//   <task times>           "id time" per line, one line per task
//   <precedence relations> "a,b" per line, optionally closed by "-1,-1"
//   <end>                  optional
//
// Any other section header is rejected. Throws ParseError with the 1-based
// line number on malformed content, dangling task ids, duplicate or missing
// time entries.
[[nodiscard]] AlbInstance load_alb(std::string_view text);

[[nodiscard]] AlbInstance load_alb_file(const std::filesystem::path& path);

}  // namespace mmw
