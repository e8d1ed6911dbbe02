#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rrcbf/constraints.hpp"
#include "rrcbf/plants.hpp"

namespace rrcbf {

/// Fully-resolved scenario description. Parsed from a flat, sectioned
/// key-value text file; unknown keys are rejected with their line number.
/// class-K leaves in files are linear gains (the shape the benchmarks use);
/// the richer ClassKFn shapes remain available through the API.
struct ScenarioConfig {
  std::string name = "scenario";

  // [plant]
  std::string plant_kind = "linear2d";  // linear2d | acc
  LinearBenchmarkParams linear_params{};
  AccBenchmarkParams acc_params{};

  // [variant]  kind = none disables the safety filter entirely
  std::string variant_kind = "none";
  std::vector<double> alpha_chain{};
  std::optional<double> beta_gain{};
  double sigma = 0.0;
  std::optional<double> delta0{};
  std::string epsd_policy = "none";  // none | constant | decaying
  double epsd_value = 0.0;
  double epsd_eps0 = 0.0;
  double epsd_rate = 0.0;
  double epsd_epsinf = 0.0;

  // [disturbance]
  std::string disturbance_kind = "zero";  // zero | constant | sine | sum_of_sines | uniform_hold
  double dist_value = 0.0;
  double dist_amp = 0.0;
  double dist_freq = 1.0;
  double dist_phase = 0.0;
  double dist_hold_dt = 0.1;
  std::vector<double> dist_amps{}, dist_freqs{}, dist_phases{};

  // [simulation]
  std::vector<double> initial_state{};
  double dt = 1e-3;
  double horizon = 20.0;
  std::optional<double> input_min{}, input_max{};
  std::uint64_t seed = 0;

  // [observer]
  bool observer_enabled = false;
  double observer_gain = 10.0;
  double observer_init = 0.0;  // initial channel-units estimate

  // [output]
  std::string output_path{};

  static ScenarioConfig from_file(const std::string& path);
  static ScenarioConfig from_text(const std::string& text, const std::string& origin = "<text>");

  /// Semantic validation (types and unknown keys are already handled while
  /// parsing). Throws ConfigError.
  void validate() const;

  bool filter_enabled() const { return variant_kind != "none"; }

  PlantModel build_plant() const;
  CbfVariantConfig build_variant() const;  // only when filter_enabled()
  DisturbanceSignal build_disturbance() const;

  /// The fully-resolved config as config-file text (defaults applied), so
  /// every run's summary is self-describing.
  std::string echo() const;

  /// Override a numeric leaf by dotted path ("variant.beta", "observer.gain",
  /// ...). Throws ConfigError for unknown or non-numeric paths.
  void set_numeric(const std::string& dotted_path, double value);
};

}  // namespace rrcbf
