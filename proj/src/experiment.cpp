#include "mmw/experiment.hpp"

#include "mmw/errors.hpp"
#include "mmw/manifest.hpp"
#include "mmw/precedence.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>

namespace mmw {

void ExperimentPlan::validate() const {
  if (algorithms.empty()) throw InvalidConfig("no algorithm selected");
  if (group_size == 0 || runs_per_cell == 0 || runs_per_cell % group_size != 0) {
    throw InvalidConfig("runs per cell (" + std::to_string(runs_per_cell) +
                        ") must be a positive multiple of the group size (" + std::to_string(group_size) + ")");
  }
  if (workers == 0) throw InvalidConfig("at least one worker is required");
}

std::uint64_t run_seed(std::uint64_t base_seed, const std::string& instance_id, Algorithm algorithm,
                       std::size_t run) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : instance_id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  auto s = mix_seed(base_seed, h);
  s = mix_seed(s, static_cast<std::uint64_t>(algorithm));
  return mix_seed(s, run);
}

void write_raw_header(std::ostream& out) {
  out << "# schema_version: " << kRawResultsSchemaVersion << "\n";
  out << "instance_id,algorithm,run,seed,m,fitness,smoothness,workload,seconds\n";
}

void write_raw_row(std::ostream& out, const RunRecord& r) {
  std::ostringstream os;
  os << std::setprecision(17) << r.instance_id << ',' << to_string(r.algorithm) << ',' << r.run << ',' << r.seed
     << ',' << r.m << ',' << r.fitness << ',' << r.smoothness << ',' << r.workload << ',' << std::setprecision(6)
     << r.seconds << '\n';
  out << os.str();
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  if (s == "nan" || s == "-nan") return std::nan("");
  return std::stod(s);
}

}  // namespace

std::vector<RunRecord> read_raw_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance("cannot open " + path.string());
  std::vector<RunRecord> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  bool version_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.rfind("# schema_version: ", 0) == 0) {
        if (std::stoi(line.substr(18)) != kRawResultsSchemaVersion) {
          throw ParseError(line_no, "unsupported raw results schema version");
        }
        version_seen = true;
      }
      continue;
    }
    if (!header_seen) {
      if (line != "instance_id,algorithm,run,seed,m,fitness,smoothness,workload,seconds") {
        throw ParseError(line_no, "unexpected raw results header");
      }
      header_seen = true;
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() != 9) throw ParseError(line_no, "expected 9 fields");
    try {
      RunRecord r;
      r.instance_id = f[0];
      r.algorithm = algorithm_from_string(f[1]);
      r.run = std::stoull(f[2]);
      r.seed = std::stoull(f[3]);
      r.m = std::stoull(f[4]);
      r.fitness = parse_double(f[5]);
      r.smoothness = parse_double(f[6]);
      r.workload = parse_double(f[7]);
      r.seconds = parse_double(f[8]);
      rows.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw ParseError(line_no, std::string("bad field: ") + e.what());
    }
  }
  if (!version_seen) throw ParseError(line_no, "missing schema_version line");
  return rows;
}

std::vector<RunRecord> run_experiment(const ExperimentPlan& plan, const std::filesystem::path& raw_csv,
                                      const RunCallback& on_run) {
  plan.validate();

  using Key = std::tuple<std::string, Algorithm, std::size_t>;
  std::map<Key, RunRecord> done;
  const bool existing = std::filesystem::exists(raw_csv) && std::filesystem::file_size(raw_csv) > 0;
  if (existing) {
    for (auto& r : read_raw_csv(raw_csv)) done[{r.instance_id, r.algorithm, r.run}] = r;
  }
  std::ofstream out(raw_csv, std::ios::app);
  if (!out) throw Error("cannot write " + raw_csv.string());
  if (!existing) {
    write_raw_header(out);
    out.flush();
  }

  std::vector<RunRecord> table;
  std::mutex mutex;
  for (const auto& manifest : plan.instances) {
    Instance instance = [&] {
      try {
        return read_instance_file(manifest);
      } catch (const Error& e) {
        throw InvalidInstance("loading " + manifest.string() + ": " + e.what());
      }
    }();
    const auto precedence = CompletePrecedenceMatrix::build(instance.size(), instance.edges());
    const auto id = instance.name().empty() ? manifest.stem().string() : instance.name();

    for (auto algorithm : plan.algorithms) {
      const auto runs = plan.runs_per_cell;
      std::vector<std::optional<RunRecord>> cell(runs);
      std::vector<bool> already(runs, false);
      for (std::size_t r = 0; r < runs; ++r) {
        const auto seed = run_seed(plan.base_seed, id, algorithm, r);
        if (auto it = done.find({id, algorithm, r}); it != done.end()) {
          if (it->second.seed != seed) {
            throw InvalidConfig("existing row for " + id + "/" + std::string(to_string(algorithm)) + "/" +
                                std::to_string(r) + " was produced with a different seed");
          }
          cell[r] = it->second;
          already[r] = true;
        }
      }

      std::size_t next_to_write = 0;
      auto flush_prefix = [&] {
        while (next_to_write < runs && cell[next_to_write]) {
          if (!already[next_to_write]) write_raw_row(out, *cell[next_to_write]);
          ++next_to_write;
        }
        out.flush();
      };
      {
        std::lock_guard lock(mutex);
        flush_prefix();
      }

      std::atomic<std::size_t> cursor{0};
      auto worker = [&] {
        while (true) {
          const auto r = cursor.fetch_add(1);
          if (r >= runs) return;
          if (already[r]) continue;
          RunRecord rec;
          rec.instance_id = id;
          rec.algorithm = algorithm;
          rec.run = r;
          rec.seed = run_seed(plan.base_seed, id, algorithm, r);
          std::optional<BalancingSolution> best;
          const auto t0 = std::chrono::steady_clock::now();
          try {
            auto config = plan.solver;
            config.algorithm = algorithm;
            config.iterations = plan.iterations;
            config.seed = rec.seed;
            auto result = solve(instance, precedence, config);
            rec.m = result.best.open_workplaces;
            rec.fitness = result.best.fitness.primary;
            rec.smoothness = smoothness(result.best, instance.cycle_time());
            rec.workload = result.best.total_workload;
            best = std::move(result.best);
          } catch (const std::exception& e) {
            std::lock_guard lock(mutex);
            std::cerr << "run " << id << "/" << to_string(algorithm) << "/" << r << " failed: " << e.what() << "\n";
            rec.m = 0;
            rec.fitness = rec.smoothness = rec.workload = std::nan("");
          }
          rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          std::lock_guard lock(mutex);
          if (on_run) on_run(rec, best ? &*best : nullptr, instance);
          cell[r] = rec;
          flush_prefix();
        }
      };
      const auto threads = std::min(plan.workers, runs);
      if (threads <= 1) {
        worker();
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
      }
      for (auto& rec : cell) table.push_back(*rec);
    }
  }
  return table;
}

}  // namespace mmw
