#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rrcbf/errors.hpp"
#include "rrcbf/repro.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::string default_out_root() {
  if (const char* env = std::getenv("RRCBF_OUT_DIR")) return env;
  return "out";
}

std::string default_config_dir() {
  if (std::filesystem::is_directory("configs")) return "configs";
#ifdef RRCBF_DEFAULT_CONFIG_DIR
  return RRCBF_DEFAULT_CONFIG_DIR;
#else
  return "configs";
#endif
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw rrcbf::ConfigError("--values: '" + item + "' is not a number");
    }
  }
  return out;
}

int cmd_run(const std::string& config_path, const std::string& out_override) {
  rrcbf::ScenarioConfig config = rrcbf::ScenarioConfig::from_file(config_path);
  config.validate();
  std::string out_dir = out_override;
  if (out_dir.empty()) out_dir = config.output_path;
  if (out_dir.empty()) out_dir = default_out_root() + "/" + config.name;
  const auto outcome = rrcbf::run_and_write(config, out_dir);
  std::cout << "scenario " << config.name << ": min_h = " << outcome.metrics.min_h
            << (outcome.singular_termination ? " (singular termination)" : "") << "\n"
            << "wrote " << out_dir << "/trajectory.csv and summary.txt\n";
  return 0;
}

int cmd_reproduce(const std::string& figure, const std::string& out_override,
                  const std::string& config_dir_override, int jobs) {
  const rrcbf::Figure fig = rrcbf::figure_from_name(figure);
  const std::string config_dir =
      config_dir_override.empty() ? default_config_dir() : config_dir_override;
  std::string out_dir = out_override.empty() ? default_out_root() + "/" + figure : out_override;
  const auto outcomes = rrcbf::reproduce_figure(fig, config_dir, out_dir, jobs);
  std::cout << rrcbf::comparison_table(outcomes);
  std::cout << "wrote " << outcomes.size() << " trace CSVs and comparison.txt under " << out_dir
            << "\n";
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& param, const std::string& values,
              const std::string& out_override, int jobs) {
  rrcbf::ScenarioConfig base = rrcbf::ScenarioConfig::from_file(config_path);
  const auto vals = parse_values(values);
  if (vals.empty()) throw rrcbf::ConfigError("sweep: --values list is empty");
  std::string out_dir = out_override.empty() ? default_out_root() + "/sweep_" + base.name : out_override;
  const auto rows = rrcbf::run_sweep(base, param, vals, out_dir, jobs);
  const std::string table = rrcbf::sweep_table(param, rows);
  std::cout << table;
  std::ofstream f(out_dir + "/sweep.txt", std::ios::binary);
  if (!f) throw std::runtime_error("cannot write sweep table under '" + out_dir + "'");
  f << table;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reciprocal resistance-based CBF toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir, config_dir, param, values, figure;
  int jobs = 0;

  auto* run = app.add_subcommand("run", "Run one scenario config");
  run->add_option("config", config_path, "Scenario config file")->required();
  run->add_option("--out", out_dir, "Output directory (default: config output.path)");

  auto* rep = app.add_subcommand("reproduce", "Run a bundled experiment suite");
  rep->add_option("figure", figure, "fig3, fig4 or fig5")->required();
  rep->add_option("--out", out_dir, "Output directory");
  rep->add_option("--configs", config_dir, "Directory holding the bundled configs");
  rep->add_option("--jobs", jobs, "Max parallel scenarios (0 = all cores)");

  auto* sweep = app.add_subcommand("sweep", "Run a scenario across parameter values");
  sweep->add_option("config", config_path, "Base scenario config file")->required();
  sweep->add_option("--param", param, "Dotted numeric config key, e.g. variant.beta")->required();
  sweep->add_option("--values", values, "Comma-separated values")->required();
  sweep->add_option("--out", out_dir, "Output directory");
  sweep->add_option("--jobs", jobs, "Max parallel scenarios (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (run->parsed()) return cmd_run(config_path, out_dir);
    if (rep->parsed()) return cmd_reproduce(figure, out_dir, config_dir, jobs);
    if (sweep->parsed()) return cmd_sweep(config_path, param, values, out_dir, jobs);
  } catch (const rrcbf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const rrcbf::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}
