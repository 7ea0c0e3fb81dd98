#include "mmw/report.hpp"

#include "mmw/errors.hpp"
#include "mmw/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>

namespace mmw {

std::string_view to_string(Criterion c) noexcept {
  return c == Criterion::Smoothness ? "smoothness" : "workload";
}

namespace {

template <typename T>
void remember(std::vector<T>& seen, const T& value) {
  if (std::find(seen.begin(), seen.end(), value) == seen.end()) seen.push_back(value);
}

std::vector<double> pooled(const std::vector<double>& values, std::size_t group_size) {
  const auto usable = values.size() - values.size() % group_size;
  if (usable == 0) return {};
  return pool_samples(std::span<const double>(values.data(), usable), group_size);
}

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << "# schema_version: " << kReportSchemaVersion << "\n" << std::setprecision(10);
  return out;
}

nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

Analysis analyze(const std::vector<RunRecord>& raw, std::size_t group_size) {
  if (group_size == 0) throw PoolError("group size must be positive");
  Analysis a;
  a.group_size = group_size;
  for (const auto& r : raw) {
    remember(a.instances, r.instance_id);
    remember(a.algorithms, r.algorithm);
  }

  for (const auto& inst : a.instances) {
    for (auto alg : a.algorithms) {
      CellSummary cell;
      cell.instance_id = inst;
      cell.algorithm = alg;
      std::vector<double> ms, fit, smooth, work;
      for (const auto& r : raw) {
        if (r.instance_id != inst || r.algorithm != alg) continue;
        ++cell.runs;
        if (r.failed()) {
          ++cell.failed;
          continue;
        }
        ms.push_back(static_cast<double>(r.m));
        fit.push_back(r.fitness);
        smooth.push_back(r.smoothness);
        work.push_back(r.workload);
        cell.best_m = cell.best_m == 0 ? r.m : std::min(cell.best_m, r.m);
      }
      if (cell.runs == 0) continue;
      cell.mean_m = mean(ms);
      cell.mean_fitness = mean(fit);
      cell.mean_smoothness = mean(smooth);
      cell.mean_workload = mean(work);
      cell.smoothness_samples = pooled(smooth, group_size);
      cell.workload_samples = pooled(work, group_size);
      a.cells.push_back(std::move(cell));
    }

    for (auto criterion : {Criterion::Smoothness, Criterion::Workload}) {
      AnovaEntry entry;
      entry.instance_id = inst;
      entry.criterion = criterion;
      std::vector<std::vector<double>> groups;
      for (const auto& cell : a.cells) {
        if (cell.instance_id != inst) continue;
        const auto& samples = criterion == Criterion::Smoothness ? cell.smoothness_samples : cell.workload_samples;
        if (samples.size() < 2) continue;
        groups.push_back(samples);
        entry.algorithms.push_back(cell.algorithm);
      }
      if (groups.size() < 2) continue;
      entry.result = one_way_anova(groups);
      a.anova.push_back(std::move(entry));
    }
  }
  return a;
}

nlohmann::json summary_json(const Analysis& analysis) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : analysis.cells) {
    cells.push_back({{"instance_id", c.instance_id},
                     {"algorithm", std::string(to_string(c.algorithm))},
                     {"runs", c.runs},
                     {"failed", c.failed},
                     {"best_m", c.best_m},
                     {"mean_m", number_or_null(c.mean_m)},
                     {"mean_fitness", number_or_null(c.mean_fitness)},
                     {"mean_smoothness", number_or_null(c.mean_smoothness)},
                     {"mean_workload", number_or_null(c.mean_workload)},
                     {"samples", c.smoothness_samples.size()}});
  }
  nlohmann::json anova = nlohmann::json::array();
  for (const auto& e : analysis.anova) {
    nlohmann::json algs = nlohmann::json::array();
    for (auto alg : e.algorithms) algs.push_back(std::string(to_string(alg)));
    const auto& r = e.result;
    anova.push_back({{"instance_id", e.instance_id},
                     {"criterion", std::string(to_string(e.criterion))},
                     {"algorithms", algs},
                     {"f_calculated", number_or_null(r.f_calculated)},
                     {"f_infinite", r.f_infinite},
                     {"df_between", r.df_between},
                     {"df_within", r.df_within},
                     {"f_ref_computed", r.f_critical},
                     {"f_ref_published", kPublishedFReference},
                     {"significant_computed", r.significant()},
                     {"significant_published", r.significant_at(kPublishedFReference)},
                     {"group_means", r.group_means},
                     {"pooled_sd", r.pooled_sd},
                     {"ci_half_widths", r.ci_half_widths}});
  }
  return nlohmann::json{
      {"schema_version", kReportSchemaVersion},
      {"group_size", analysis.group_size},
      {"instances", analysis.instances},
      {"notes",
       "Samples are means of consecutive groups of runs; their normality is assumed, not tested. "
       "A difference between algorithms is declared only when f_calculated exceeds the reference value."},
      {"cells", cells},
      {"anova", anova},
  };
}

ReportFiles render_report(const Analysis& analysis, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  ReportFiles files{out_dir / "best_m.csv", out_dir / "anova_f.csv", out_dir / "anova_detail.csv",
                    out_dir / "ci_series.csv", out_dir / "summary.json"};

  auto find_cell = [&](const std::string& inst, Algorithm alg) -> const CellSummary* {
    for (const auto& c : analysis.cells) {
      if (c.instance_id == inst && c.algorithm == alg) return &c;
    }
    return nullptr;
  };

  {
    auto out = open_csv(files.best_m);
    out << "instance_id";
    for (auto alg : analysis.algorithms) out << ',' << to_string(alg);
    out << '\n';
    for (const auto& inst : analysis.instances) {
      out << inst;
      for (auto alg : analysis.algorithms) {
        out << ',';
        if (const auto* c = find_cell(inst, alg); c && c->best_m > 0) out << c->best_m;
      }
      out << '\n';
    }
  }

  {
    auto out = open_csv(files.anova_f);
    out << "# f_ref_published: " << kPublishedFReference << "\n";
    out << "criterion";
    for (const auto& inst : analysis.instances) out << ',' << inst;
    out << '\n';
    if (!analysis.instances.empty()) {
      for (auto criterion : {Criterion::Smoothness, Criterion::Workload}) {
        out << to_string(criterion);
        for (const auto& inst : analysis.instances) {
          out << ',';
          for (const auto& e : analysis.anova) {
            if (e.instance_id == inst && e.criterion == criterion) {
              if (e.result.f_infinite) {
                out << "inf";
              } else {
                out << e.result.f_calculated;
              }
            }
          }
        }
        out << '\n';
      }
    }
  }

  {
    auto out = open_csv(files.anova_detail);
    out << "instance_id,criterion,f_calculated,df_between,df_within,f_ref_computed,f_ref_published,"
           "significant_computed,significant_published\n";
    for (const auto& e : analysis.anova) {
      const auto& r = e.result;
      out << e.instance_id << ',' << to_string(e.criterion) << ',';
      if (r.f_infinite) {
        out << "inf";
      } else {
        out << r.f_calculated;
      }
      out << ',' << r.df_between << ',' << r.df_within << ',' << r.f_critical << ',' << kPublishedFReference << ','
          << (r.significant() ? 1 : 0) << ',' << (r.significant_at(kPublishedFReference) ? 1 : 0) << '\n';
    }
  }

  {
    auto out = open_csv(files.ci_series);
    out << "instance_id,criterion,algorithm,samples,mean,half_width,lower,upper\n";
    for (const auto& e : analysis.anova) {
      for (std::size_t g = 0; g < e.algorithms.size(); ++g) {
        const auto m = e.result.group_means[g];
        const auto h = e.result.ci_half_widths[g];
        const auto* cell = find_cell(e.instance_id, e.algorithms[g]);
        const auto samples = cell ? cell->smoothness_samples.size() : 0;
        out << e.instance_id << ',' << to_string(e.criterion) << ',' << to_string(e.algorithms[g]) << ','
            << samples << ',' << m << ',' << h << ',' << m - h << ',' << m + h << '\n';
      }
    }
  }

  write_json_file(files.summary, summary_json(analysis));
  return files;
}

}  // namespace mmw
