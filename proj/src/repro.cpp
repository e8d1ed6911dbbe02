#include "rrcbf/repro.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rrcbf/errors.hpp"

namespace rrcbf {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string table_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%12.6g", v);
  return buf;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir + "'");
}

std::string summary_text(const ScenarioOutcome& out, const ScenarioConfig& config) {
  std::ostringstream o;
  o << "scenario: " << config.name << "\n";
  o << "records: " << out.trajectory.records.size() << "\n";
  o << "singular_termination: " << (out.singular_termination ? "true" : "false") << "\n";
  o << "out_of_box_warnings: " << out.trajectory.out_of_box_warnings << "\n";
  o << "min_h = " << num(out.metrics.min_h) << "\n";
  if (out.metrics.first_violation_time)
    o << "first_violation_time = " << num(*out.metrics.first_violation_time) << "\n";
  else
    o << "first_violation_time = none\n";
  o << "settling_h = " << num(out.metrics.settling_h) << "\n";
  o << "max_input = " << num(out.metrics.max_input) << "\n";
  o << "infeasible_steps = " << out.metrics.infeasible_steps << "\n";
  o << "\n# resolved configuration\n";
  o << config.echo();
  return o.str();
}

}  // namespace

Figure figure_from_name(const std::string& name) {
  if (name == "fig3") return Figure::Fig3;
  if (name == "fig4") return Figure::Fig4;
  if (name == "fig5") return Figure::Fig5;
  throw ConfigError("unknown figure '" + name + "' (expected fig3, fig4 or fig5)");
}

std::vector<std::string> figure_scenario_names(Figure fig) {
  std::vector<std::string> names;
  switch (fig) {
    case Figure::Fig3:
      for (const char* v : {"zcbf", "rcbf", "rrcbf"})
        for (int i = 1; i <= 6; ++i)
          names.push_back("fig3_" + std::string(v) + "_ic" + std::to_string(i));
      break;
    case Figure::Fig4:
      for (const char* v : {"zcbf", "rcbf", "rrcbf"}) names.push_back("fig4_" + std::string(v));
      break;
    case Figure::Fig5:
      for (const char* v : {"cbf", "rocbf", "docbf", "rrcbf", "dorrcbf"})
        names.push_back("fig5_" + std::string(v));
      break;
  }
  return names;
}

std::vector<ScenarioConfig> load_figure_scenarios(Figure fig, const std::string& config_dir) {
  std::vector<ScenarioConfig> out;
  for (const auto& name : figure_scenario_names(fig)) {
    ScenarioConfig c = ScenarioConfig::from_file(config_dir + "/" + name + ".cfg");
    c.validate();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ScenarioOutcome> reproduce_figure(Figure fig, const std::string& config_dir,
                                              const std::string& out_dir, int num_threads) {
  const auto configs = load_figure_scenarios(fig, config_dir);
  ensure_dir(out_dir);
  const auto trajectories = run_batch(configs, num_threads);

  std::vector<ScenarioOutcome> outcomes;
  outcomes.reserve(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    ScenarioOutcome o;
    o.name = configs[i].name;
    o.trajectory = trajectories[i];
    o.metrics = compute_metrics(o.trajectory);
    o.singular_termination = o.trajectory.singular_termination;
    write_trajectory_csv(o.trajectory, out_dir + "/" + o.name + ".csv");
    outcomes.push_back(std::move(o));
  }

  std::ofstream table(out_dir + "/comparison.txt", std::ios::binary);
  if (!table) throw std::runtime_error("cannot write comparison table in '" + out_dir + "'");
  table << comparison_table(outcomes);
  return outcomes;
}

std::string comparison_table(const std::vector<ScenarioOutcome>& outcomes) {
  std::ostringstream o;
  o << "scenario              min_h        first_viol   settling_h   max_input    infeas  singular\n";
  for (const auto& r : outcomes) {
    char name[32];
    std::snprintf(name, sizeof(name), "%-20s", r.name.c_str());
    o << name << table_num(r.metrics.min_h) << " ";
    if (r.metrics.first_violation_time)
      o << table_num(*r.metrics.first_violation_time) << " ";
    else
      o << "        none" << " ";
    o << table_num(r.metrics.settling_h) << " " << table_num(r.metrics.max_input) << " ";
    char tail[32];
    std::snprintf(tail, sizeof(tail), "%7ld  %s", r.metrics.infeasible_steps,
                  r.singular_termination ? "yes" : "no");
    o << tail << "\n";
  }
  return o.str();
}

ScenarioOutcome run_and_write(const ScenarioConfig& config, const std::string& out_dir) {
  ensure_dir(out_dir);
  ScenarioOutcome o;
  o.name = config.name;
  o.trajectory = run_scenario(config);
  o.metrics = compute_metrics(o.trajectory);
  o.singular_termination = o.trajectory.singular_termination;
  write_trajectory_csv(o.trajectory, out_dir + "/trajectory.csv");
  std::ofstream summary(out_dir + "/summary.txt", std::ios::binary);
  if (!summary) throw std::runtime_error("cannot write summary in '" + out_dir + "'");
  summary << summary_text(o, config);
  if (!summary) throw std::runtime_error("write failed for summary in '" + out_dir + "'");
  return o;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& base, const std::string& param,
                                const std::vector<double>& values, const std::string& out_dir,
                                int num_threads) {
  if (values.empty()) throw ConfigError("sweep: empty value list");
  std::vector<ScenarioConfig> configs;
  configs.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ScenarioConfig c = base;
    c.set_numeric(param, values[i]);
    c.name = base.name + "_" + param + "_" + std::to_string(i);
    c.validate();
    configs.push_back(std::move(c));
  }
  const auto trajectories = run_batch(configs, num_threads);

  if (!out_dir.empty()) ensure_dir(out_dir);
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!out_dir.empty())
      write_trajectory_csv(trajectories[i], out_dir + "/" + configs[i].name + ".csv");
    rows.push_back({values[i], compute_metrics(trajectories[i])});
  }
  return rows;
}

std::string sweep_table(const std::string& param, const std::vector<SweepRow>& rows) {
  std::ostringstream o;
  o << param << "        min_h        settling_h   max_input    infeas\n";
  for (const auto& r : rows) {
    o << table_num(r.value) << " " << table_num(r.metrics.min_h) << " "
      << table_num(r.metrics.settling_h) << " " << table_num(r.metrics.max_input) << " ";
    char tail[16];
    std::snprintf(tail, sizeof(tail), "%7ld", r.metrics.infeasible_steps);
    o << tail << "\n";
  }
  return o.str();
}

}  // namespace rrcbf
