#include "mmw/solution_io.hpp"

#include "mmw/errors.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

namespace mmw {

nlohmann::json solution_to_json(const BalancingSolution& solution, const Instance& instance,
                                DisplacementMode mode) {
  nlohmann::json stations = nlohmann::json::array();
  for (std::size_t s = 0; s < solution.stations.size(); ++s) {
    nlohmann::json workplaces = nlohmann::json::array();
    for (const auto& w : solution.stations[s].workplaces) {
      nlohmann::json tasks = nlohmann::json::array();
      for (const auto& t : w.tasks) {
        tasks.push_back({{"id", t.task + 1},
                         {"start", t.start},
                         {"end", t.end},
                         {"corrected_duration", t.corrected_duration},
                         {"displacement_added", t.displacement_added}});
      }
      workplaces.push_back({{"zone", w.zone}, {"workload", w.workload}, {"idle", w.idle}, {"tasks", tasks}});
    }
    stations.push_back({{"index", s + 1}, {"workplaces", workplaces}});
  }
  return nlohmann::json{
      {"schema_version", kSolutionSchemaVersion},
      {"instance", instance.name()},
      {"cycle_time", instance.cycle_time()},
      {"max_workplaces", instance.max_workplaces()},
      {"displacement_mode", std::string(to_string(mode))},
      {"open_workplaces", solution.open_workplaces},
      {"total_workload", solution.total_workload},
      {"fitness",
       {{"primary", solution.fitness.primary},
        {"workload", solution.fitness.workload},
        {"open", solution.fitness.open}}},
      {"stations", stations},
  };
}

BalancingSolution solution_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSolutionSchemaVersion) {
      throw InvalidInstance("unsupported solution schema_version");
    }
    BalancingSolution sol;
    for (const auto& js : j.at("stations")) {
      Workstation station;
      const auto index = js.at("index").get<std::size_t>();
      if (index != sol.stations.size() + 1) throw InvalidInstance("station indices must run 1, 2, ...");
      for (const auto& jw : js.at("workplaces")) {
        Workplace w;
        w.zone = jw.at("zone").get<Zone>();
        w.workload = jw.at("workload").get<Time>();
        w.idle = jw.at("idle").get<Time>();
        for (const auto& jt : jw.at("tasks")) {
          const auto id = jt.at("id").get<std::size_t>();
          if (id < 1) throw InvalidInstance("task ids are 1-based");
          w.tasks.push_back(ScheduledTask{id - 1, index - 1, w.zone, jt.at("start").get<Time>(),
                                          jt.at("end").get<Time>(), jt.at("corrected_duration").get<Time>(),
                                          jt.at("displacement_added").get<Time>()});
        }
        station.workplaces.push_back(std::move(w));
      }
      sol.stations.push_back(std::move(station));
    }
    sol.open_workplaces = j.at("open_workplaces").get<std::size_t>();
    sol.total_workload = j.at("total_workload").get<Time>();
    const auto& jf = j.at("fitness");
    sol.fitness = FitnessValue{jf.at("primary").get<double>(), jf.at("workload").get<Time>(),
                               jf.at("open").get<std::size_t>()};
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInstance(std::string("malformed solution file: ") + e.what());
  }
}

void render_gantt(std::ostream& out, const BalancingSolution& solution, const Instance& instance,
                  std::size_t width) {
  const auto c = instance.cycle_time();
  const auto column = [&](Time t) {
    return static_cast<std::size_t>(std::lround(t / c * static_cast<double>(width)));
  };
  out << "cycle time " << c << ", " << solution.open_workplaces << " open workplaces, total workload "
      << std::fixed << std::setprecision(2) << solution.total_workload << "\n";
  for (std::size_t s = 0; s < solution.stations.size(); ++s) {
    out << "\nstation " << s + 1 << "\n";
    for (const auto& w : solution.stations[s].workplaces) {
      std::string bar(width, ' ');
      std::size_t cursor = 0;
      bool alt = false;
      for (const auto& t : w.tasks) {
        const auto from = std::min(column(t.start), width);
        const auto to = std::min(std::max(column(t.end), from + 1), width);
        for (auto k = cursor; k < from; ++k) bar[k] = '.';
        for (auto k = from; k < to; ++k) bar[k] = alt ? '=' : '#';
        alt = !alt;
        cursor = std::max(cursor, to);
      }
      out << "  zone " << w.zone << " |" << bar << "| load " << w.workload << " idle " << w.idle << "\n";
      out << "         ";
      for (const auto& t : w.tasks) {
        out << " T" << t.task + 1 << "[" << t.start << "-" << t.end << "]";
        if (t.displacement_added > 0.0) out << "+" << t.displacement_added;
      }
      out << "\n";
    }
  }
  out.unsetf(std::ios::floatfield);
}

}  // namespace mmw
