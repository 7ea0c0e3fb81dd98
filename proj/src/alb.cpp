#include "mmw/alb.hpp"

#include "mmw/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace mmw {
namespace {

enum class Section { None, TaskCount, CycleTime, OrderStrength, TaskTimes, Precedence, End };

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Section section_from_header(std::string_view header, std::size_t line) {
  if (header == "<number of tasks>") return Section::TaskCount;
  if (header == "<cycle time>") return Section::CycleTime;
  if (header == "<order strength>") return Section::OrderStrength;
  if (header == "<task times>") return Section::TaskTimes;
  if (header == "<precedence relations>") return Section::Precedence;
  if (header == "<end>") return Section::End;
  throw ParseError(line, "unknown section " + std::string(header));
}

long long parse_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

double parse_decimal(std::string_view token, std::size_t line) {
  std::string copy(token);
  std::replace(copy.begin(), copy.end(), ',', '.');
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(copy, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != copy.size() || copy.empty()) {
    throw ParseError(line, "expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

// Splits "a b", "a,b" or "a, b" into two tokens.
std::pair<std::string_view, std::string_view> split_pair(std::string_view text, std::size_t line) {
  const auto sep = text.find_first_of(" \t,");
  if (sep == std::string_view::npos) throw ParseError(line, "expected two fields");
  auto rest = trim(text.substr(sep + 1));
  if (!rest.empty() && rest.front() == ',') rest = trim(rest.substr(1));
  auto first = trim(text.substr(0, sep));
  if (first.empty() || rest.empty() || rest.find_first_of(" \t,") != std::string_view::npos) {
    throw ParseError(line, "expected two fields");
  }
  return {first, rest};
}

}  // namespace

AlbInstance load_alb(std::string_view text) {
  AlbInstance out;
  std::optional<std::size_t> count;
  std::vector<bool> has_time;
  std::vector<Section> seen;
  Section current = Section::None;
  bool precedence_closed = false;
  std::size_t times_header_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find('\n', pos);
    const auto raw = text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '<') {
      current = section_from_header(line, line_no);
      if (std::find(seen.begin(), seen.end(), current) != seen.end()) {
        throw ParseError(line_no, "duplicate section " + std::string(line));
      }
      seen.push_back(current);
      if ((current == Section::TaskTimes || current == Section::Precedence) && !count) {
        throw ParseError(line_no, "section appears before <number of tasks>");
      }
      if (current == Section::TaskTimes) times_header_line = line_no;
      continue;
    }

    switch (current) {
      case Section::None:
        throw ParseError(line_no, "content outside of any section");
      case Section::TaskCount: {
        if (count) throw ParseError(line_no, "task count given twice");
        const auto n = parse_integer(line, line_no);
        if (n < 1) throw ParseError(line_no, "task count must be positive");
        count = static_cast<std::size_t>(n);
        out.task_count = *count;
        out.times.assign(*count, 0.0);
        has_time.assign(*count, false);
        break;
      }
      case Section::CycleTime: {
        if (out.cycle_time) throw ParseError(line_no, "cycle time given twice");
        const auto c = parse_decimal(line, line_no);
        if (!(c > 0.0)) throw ParseError(line_no, "cycle time must be positive");
        out.cycle_time = c;
        break;
      }
      case Section::OrderStrength:
        if (out.order_strength) throw ParseError(line_no, "order strength given twice");
        out.order_strength = parse_decimal(line, line_no);
        break;
      case Section::TaskTimes: {
        const auto [id_tok, time_tok] = split_pair(line, line_no);
        const auto id = parse_integer(id_tok, line_no);
        const auto t = parse_integer(time_tok, line_no);
        if (id < 1 || static_cast<std::size_t>(id) > *count) {
          throw ParseError(line_no, "task id " + std::to_string(id) + " out of range");
        }
        if (t < 0) throw ParseError(line_no, "negative task time");
        const auto idx = static_cast<std::size_t>(id - 1);
        if (has_time[idx]) {
          throw ParseError(line_no, "duplicate time entry for task " + std::to_string(id));
        }
        has_time[idx] = true;
        out.times[idx] = static_cast<Time>(t);
        break;
      }
      case Section::Precedence: {
        if (precedence_closed) throw ParseError(line_no, "precedence entry after sentinel");
        const auto [a_tok, b_tok] = split_pair(line, line_no);
        const auto a = parse_integer(a_tok, line_no);
        const auto b = parse_integer(b_tok, line_no);
        if (a == -1 && b == -1) {
          precedence_closed = true;
          break;
        }
        const auto in_range = [&](long long v) { return v >= 1 && static_cast<std::size_t>(v) <= *count; };
        if (!in_range(a) || !in_range(b)) {
          throw ParseError(line_no, "precedence relation references unknown task");
        }
        if (a == b) throw ParseError(line_no, "task precedes itself");
        out.edges.push_back({static_cast<TaskIndex>(a - 1), static_cast<TaskIndex>(b - 1)});
        break;
      }
      case Section::End:
        throw ParseError(line_no, "content after <end>");
    }
  }

  if (!count) throw ParseError(line_no, "missing <number of tasks> section");
  if (times_header_line == 0) throw ParseError(line_no, "missing <task times> section");
  for (std::size_t i = 0; i < *count; ++i) {
    if (!has_time[i]) {
      throw ParseError(times_header_line, "no time given for task " + std::to_string(i + 1));
    }
  }
  return out;
}

AlbInstance load_alb_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_alb(buffer.str());
}

}  // namespace mmw
