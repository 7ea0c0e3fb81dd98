#include "mmw/manifest.hpp"

#include "mmw/errors.hpp"

#include <fstream>

namespace mmw {

nlohmann::json instance_to_json(const Instance& instance) {
  nlohmann::json tasks = nlohmann::json::array();
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& t = instance.task(i);
    tasks.push_back({{"id", i + 1}, {"time", t.base_time}, {"zone", t.zone}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : instance.edges()) edges.push_back({e.before + 1, e.after + 1});
  nlohmann::json displacement = nlohmann::json::array();
  for (const auto& row : instance.displacement().table()) {
    displacement.push_back(nlohmann::json(std::vector<Time>(row.begin(), row.end())));
  }
  return nlohmann::json{
      {"schema_version", kManifestSchemaVersion},
      {"name", instance.name()},
      {"cycle_time", instance.cycle_time()},
      {"max_workplaces", instance.max_workplaces()},
      {"tasks", std::move(tasks)},
      {"edges", std::move(edges)},
      {"displacement", std::move(displacement)},
  };
}

Instance instance_from_json(const nlohmann::json& j) {
  try {
    const auto version = j.at("schema_version").get<int>();
    if (version != kManifestSchemaVersion) {
      throw InvalidInstance("unsupported manifest schema_version " + std::to_string(version));
    }
    const auto& jt = j.at("tasks");
    std::vector<Task> tasks(jt.size());
    std::vector<bool> seen(jt.size(), false);
    for (const auto& t : jt) {
      const auto id = t.at("id").get<std::size_t>();
      if (id < 1 || id > tasks.size() || seen[id - 1]) {
        throw InvalidInstance("task ids must be unique and contiguous from 1");
      }
      seen[id - 1] = true;
      tasks[id - 1] = Task{t.at("time").get<Time>(), t.at("zone").get<Zone>()};
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInstance("edges must be [before, after] pairs");
      const auto a = e[0].get<std::size_t>();
      const auto b = e[1].get<std::size_t>();
      if (a < 1 || b < 1 || a > tasks.size() || b > tasks.size()) {
        throw InvalidInstance("edge references unknown task");
      }
      edges.push_back({a - 1, b - 1});
    }
    DisplacementMatrix::Table table{};
    const auto& jd = j.at("displacement");
    if (jd.size() != kZoneCount) throw InvalidInstance("displacement matrix must be 9x9");
    for (std::size_t r = 0; r < kZoneCount; ++r) {
      if (jd[r].size() != kZoneCount) throw InvalidInstance("displacement matrix must be 9x9");
      for (std::size_t c = 0; c < kZoneCount; ++c) table[r][c] = jd[r][c].get<Time>();
    }
    return Instance(j.value("name", std::string{}), std::move(tasks), std::move(edges),
                    j.at("cycle_time").get<Time>(), DisplacementMatrix(table),
                    j.at("max_workplaces").get<std::size_t>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInstance(std::string("malformed instance manifest: ") + e.what());
  }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInstance(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Instance read_instance_file(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path));
}

}  // namespace mmw
