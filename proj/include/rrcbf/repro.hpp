#pragma once

#include <string>
#include <vector>

#include "rrcbf/batch.hpp"
#include "rrcbf/csv.hpp"

namespace rrcbf {

enum class Figure { Fig3, Fig4, Fig5 };

Figure figure_from_name(const std::string& name);  // "fig3" | "fig4" | "fig5"

/// Names of the bundled scenario fixtures for a figure, in table order.
std::vector<std::string> figure_scenario_names(Figure fig);

/// Loads <config_dir>/<name>.cfg for every fixture of the figure.
std::vector<ScenarioConfig> load_figure_scenarios(Figure fig, const std::string& config_dir);

struct ScenarioOutcome {
  std::string name;
  SafetyMetrics metrics;
  bool singular_termination = false;
  Trajectory trajectory;
};

/// Runs every fixture of a figure (scenarios in parallel), writes one CSV per
/// trace under out_dir plus comparison.txt, and returns the outcomes in
/// fixture order.
std::vector<ScenarioOutcome> reproduce_figure(Figure fig, const std::string& config_dir,
                                              const std::string& out_dir, int num_threads = 0);

std::string comparison_table(const std::vector<ScenarioOutcome>& outcomes);

/// Runs one scenario and writes <out_dir>/trajectory.csv plus
/// <out_dir>/summary.txt (metrics and the fully-resolved config echo).
ScenarioOutcome run_and_write(const ScenarioConfig& config, const std::string& out_dir);

struct SweepRow {
  double value = 0.0;
  SafetyMetrics metrics;
};

/// One run per value with the named numeric leaf overridden; per-value CSVs
/// land in out_dir (empty out_dir skips writing).
std::vector<SweepRow> run_sweep(const ScenarioConfig& base, const std::string& param,
                                const std::vector<double>& values, const std::string& out_dir = "",
                                int num_threads = 0);

std::string sweep_table(const std::string& param, const std::vector<SweepRow>& rows);

}  // namespace rrcbf
