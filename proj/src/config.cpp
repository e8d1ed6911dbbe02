#include "rrcbf/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "rrcbf/errors.hpp"

namespace rrcbf {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_number(const std::string& v, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected a number, got '" + v + "'");
  }
}

std::vector<double> parse_number_list(const std::string& v, const std::string& where) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(trim(item), where));
  if (out.empty()) throw ConfigError(where + ": expected a comma-separated number list");
  return out;
}

bool parse_bool(const std::string& v, const std::string& where) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError(where + ": expected true/false, got '" + v + "'");
}

std::string join(const std::vector<double>& v) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
    if (i) out += ", ";
    out += buf;
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

enum class Leaf { Str, Bool, Num, NumList, UInt };

const std::map<std::string, Leaf>& schema() {
  static const std::map<std::string, Leaf> s = {
      {"plant.kind", Leaf::Str},
      {"plant.m", Leaf::Num},
      {"plant.f0", Leaf::Num},
      {"plant.f1", Leaf::Num},
      {"plant.f2", Leaf::Num},
      {"plant.gravity", Leaf::Num},
      {"plant.v_d", Leaf::Num},
      {"plant.d0", Leaf::Num},
      {"plant.k_gain", Leaf::Num},
      {"plant.a_l", Leaf::Num},
      {"plant.nominal_offset", Leaf::Num},
      {"variant.kind", Leaf::Str},
      {"variant.alpha_chain", Leaf::NumList},
      {"variant.beta", Leaf::Num},
      {"variant.sigma", Leaf::Num},
      {"variant.delta0", Leaf::Num},
      {"variant.epsd_policy", Leaf::Str},
      {"variant.epsd_value", Leaf::Num},
      {"variant.epsd_eps0", Leaf::Num},
      {"variant.epsd_rate", Leaf::Num},
      {"variant.epsd_epsinf", Leaf::Num},
      {"disturbance.kind", Leaf::Str},
      {"disturbance.value", Leaf::Num},
      {"disturbance.amp", Leaf::Num},
      {"disturbance.freq", Leaf::Num},
      {"disturbance.phase", Leaf::Num},
      {"disturbance.hold_dt", Leaf::Num},
      {"disturbance.amps", Leaf::NumList},
      {"disturbance.freqs", Leaf::NumList},
      {"disturbance.phases", Leaf::NumList},
      {"simulation.initial_state", Leaf::NumList},
      {"simulation.dt", Leaf::Num},
      {"simulation.horizon", Leaf::Num},
      {"simulation.input_min", Leaf::Num},
      {"simulation.input_max", Leaf::Num},
      {"simulation.seed", Leaf::UInt},
      {"observer.enabled", Leaf::Bool},
      {"observer.gain", Leaf::Num},
      {"observer.init", Leaf::Num},
      {"output.path", Leaf::Str},
  };
  return s;
}

void apply_entry(ScenarioConfig& c, const std::string& key, const std::string& value,
                 const std::string& where) {
  const auto it = schema().find(key);
  if (it == schema().end()) throw ConfigError(where + ": unknown key '" + key + "'");
  auto n = [&] { return parse_number(value, where); };
  auto nl = [&] { return parse_number_list(value, where); };

  if (key == "plant.kind") c.plant_kind = value;
  else if (key == "plant.m") c.acc_params.m = n();
  else if (key == "plant.f0") c.acc_params.f0 = n();
  else if (key == "plant.f1") c.acc_params.f1 = n();
  else if (key == "plant.f2") c.acc_params.f2 = n();
  else if (key == "plant.gravity") c.acc_params.gravity = n();
  else if (key == "plant.v_d") c.acc_params.v_d = n();
  else if (key == "plant.d0") c.acc_params.d0 = n();
  else if (key == "plant.k_gain") c.acc_params.k_gain = n();
  else if (key == "plant.a_l") c.acc_params.a_l = n();
  else if (key == "plant.nominal_offset") c.linear_params.nominal_offset = n();
  else if (key == "variant.kind") c.variant_kind = value;
  else if (key == "variant.alpha_chain") c.alpha_chain = nl();
  else if (key == "variant.beta") c.beta_gain = n();
  else if (key == "variant.sigma") c.sigma = n();
  else if (key == "variant.delta0") c.delta0 = n();
  else if (key == "variant.epsd_policy") c.epsd_policy = value;
  else if (key == "variant.epsd_value") c.epsd_value = n();
  else if (key == "variant.epsd_eps0") c.epsd_eps0 = n();
  else if (key == "variant.epsd_rate") c.epsd_rate = n();
  else if (key == "variant.epsd_epsinf") c.epsd_epsinf = n();
  else if (key == "disturbance.kind") c.disturbance_kind = value;
  else if (key == "disturbance.value") c.dist_value = n();
  else if (key == "disturbance.amp") c.dist_amp = n();
  else if (key == "disturbance.freq") c.dist_freq = n();
  else if (key == "disturbance.phase") c.dist_phase = n();
  else if (key == "disturbance.hold_dt") c.dist_hold_dt = n();
  else if (key == "disturbance.amps") c.dist_amps = nl();
  else if (key == "disturbance.freqs") c.dist_freqs = nl();
  else if (key == "disturbance.phases") c.dist_phases = nl();
  else if (key == "simulation.initial_state") c.initial_state = nl();
  else if (key == "simulation.dt") c.dt = n();
  else if (key == "simulation.horizon") c.horizon = n();
  else if (key == "simulation.input_min") c.input_min = n();
  else if (key == "simulation.input_max") c.input_max = n();
  else if (key == "simulation.seed") {
    const double v = n();
    if (v < 0.0 || v != std::floor(v)) throw ConfigError(where + ": seed must be a nonnegative integer");
    c.seed = static_cast<std::uint64_t>(v);
  } else if (key == "observer.enabled") c.observer_enabled = parse_bool(value, where);
  else if (key == "observer.gain") c.observer_gain = n();
  else if (key == "observer.init") c.observer_init = n();
  else if (key == "output.path") c.output_path = value;
}

}  // namespace

ScenarioConfig ScenarioConfig::from_text(const std::string& text, const std::string& origin) {
  ScenarioConfig c;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  std::map<std::string, int> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno);
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ConfigError(where + ": malformed section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty()) throw ConfigError(where + ": empty section name");
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    if (section.empty()) throw ConfigError(where + ": key outside any [section]");
    const std::string key = section + "." + trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
    if (!seen.emplace(key, lineno).second)
      throw ConfigError(where + ": duplicate key '" + key + "' (first at line " +
                        std::to_string(seen[key]) + ")");
    apply_entry(c, key, value, where);
  }
  return c;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  ScenarioConfig c = from_text(ss.str(), path);
  // scenario name from the file stem
  std::string stem = path;
  const auto slash = stem.find_last_of("/\\");
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  const auto dot = stem.find_last_of('.');
  if (dot != std::string::npos) stem = stem.substr(0, dot);
  c.name = stem;
  return c;
}

void ScenarioConfig::validate() const {
  if (plant_kind != "linear2d" && plant_kind != "acc")
    throw ConfigError("plant.kind must be linear2d or acc, got '" + plant_kind + "'");
  static const std::vector<std::string> kinds = {"none",  "zcbf",    "rcbf",  "rrcbf", "rocbf",
                                                 "docbf", "dorrcbf", "horrcbf", "hodorrcbf"};
  if (std::find(kinds.begin(), kinds.end(), variant_kind) == kinds.end())
    throw ConfigError("variant.kind '" + variant_kind + "' is not a known variant");
  if (!(dt > 0.0)) throw ConfigError("simulation.dt must be positive");
  if (!(horizon > 0.0)) throw ConfigError("simulation.horizon must be positive");
  if (input_min.has_value() != input_max.has_value())
    throw ConfigError("simulation.input_min/input_max must be given together");
  if (input_min.has_value() && *input_min > *input_max)
    throw ConfigError("simulation.input_min > input_max");

  const PlantModel plant = build_plant();
  if (static_cast<int>(initial_state.size()) != plant.state_dim)
    throw ConfigError("simulation.initial_state needs " + std::to_string(plant.state_dim) +
                      " entries for plant " + plant_kind);

  if (disturbance_kind == "uniform_hold" && !(dist_hold_dt > 0.0))
    throw ConfigError("disturbance.hold_dt must be positive");
  build_disturbance();  // throws on malformed kind/fields

  if (epsd_policy != "none" && epsd_policy != "constant" && epsd_policy != "decaying")
    throw ConfigError("variant.epsd_policy must be none/constant/decaying");

  if (filter_enabled()) {
    const CbfVariantConfig vc = build_variant();
    vc.validate(plant.safe_fn.relative_degree);
    if (variant_uses_estimate(vc.variant) && !observer_enabled)
      throw ConfigError("variant '" + variant_kind + "' requires observer.enabled = true");
    // Reciprocal variants must start strictly inside the safe set.
    Vector x0 = Eigen::Map<const Vector>(initial_state.data(),
                                         static_cast<Eigen::Index>(initial_state.size()));
    if (variant_uses_beta(vc.variant) || vc.variant == CbfVariant::RCBF) {
      if (!(plant.safe_fn.h(x0) > 0.0))
        throw ConfigError("reciprocal variant needs h(x0) > 0, got h = " +
                          std::to_string(plant.safe_fn.h(x0)));
    }
  }
  if (observer_enabled && !(observer_gain > 0.0))
    throw ConfigError("observer.gain must be positive");
}

PlantModel ScenarioConfig::build_plant() const {
  if (plant_kind == "linear2d") return make_linear_benchmark(linear_params);
  if (plant_kind == "acc") return make_acc_benchmark(acc_params);
  throw ConfigError("unknown plant kind '" + plant_kind + "'");
}

CbfVariantConfig ScenarioConfig::build_variant() const {
  CbfVariantConfig vc;
  if (variant_kind == "zcbf") vc.variant = CbfVariant::ZCBF;
  else if (variant_kind == "rcbf") vc.variant = CbfVariant::RCBF;
  else if (variant_kind == "rrcbf") vc.variant = CbfVariant::RRCBF;
  else if (variant_kind == "rocbf") vc.variant = CbfVariant::RoCBF;
  else if (variant_kind == "docbf") vc.variant = CbfVariant::DOCBF;
  else if (variant_kind == "dorrcbf") vc.variant = CbfVariant::DORRCBF;
  else if (variant_kind == "horrcbf") vc.variant = CbfVariant::HORRCBF;
  else if (variant_kind == "hodorrcbf") vc.variant = CbfVariant::HODORRCBF;
  else throw ConfigError("variant kind '" + variant_kind + "' has no builder");

  for (double g : alpha_chain) vc.alpha_chain.push_back(ClassKFn::linear(g));
  if (beta_gain.has_value()) vc.beta = ClassKFn::linear(*beta_gain);
  vc.sigma = sigma;
  vc.disturbance_bound = delta0;
  if (epsd_policy == "constant") {
    vc.error_bound_policy.kind = EstimationErrorPolicy::Kind::Constant;
    vc.error_bound_policy.eps0 = epsd_value;
  } else if (epsd_policy == "decaying") {
    vc.error_bound_policy.kind = EstimationErrorPolicy::Kind::Decaying;
    vc.error_bound_policy.eps0 = epsd_eps0;
    vc.error_bound_policy.rate = epsd_rate;
    vc.error_bound_policy.eps_inf = epsd_epsinf;
  }
  return vc;
}

DisturbanceSignal ScenarioConfig::build_disturbance() const {
  if (disturbance_kind == "zero") return DisturbanceSignal::zero();
  if (disturbance_kind == "constant") return DisturbanceSignal::constant(dist_value);
  if (disturbance_kind == "sine") return DisturbanceSignal::sine(dist_amp, dist_freq, dist_phase);
  if (disturbance_kind == "sum_of_sines")
    return DisturbanceSignal::sum_of_sines(dist_amps, dist_freqs, dist_phases);
  if (disturbance_kind == "uniform_hold")
    return DisturbanceSignal::uniform_hold(dist_amp, dist_hold_dt, seed);
  throw ConfigError("disturbance.kind '" + disturbance_kind + "' is not known");
}

std::string ScenarioConfig::echo() const {
  std::ostringstream o;
  o << "[plant]\n";
  o << "kind = " << plant_kind << "\n";
  if (plant_kind == "acc") {
    o << "m = " << num(acc_params.m) << "\n";
    o << "f0 = " << num(acc_params.f0) << "\n";
    o << "f1 = " << num(acc_params.f1) << "\n";
    o << "f2 = " << num(acc_params.f2) << "\n";
    o << "gravity = " << num(acc_params.gravity) << "\n";
    o << "v_d = " << num(acc_params.v_d) << "\n";
    o << "d0 = " << num(acc_params.d0) << "\n";
    o << "k_gain = " << num(acc_params.k_gain) << "\n";
    o << "a_l = " << num(acc_params.a_l) << "\n";
  } else {
    o << "nominal_offset = " << num(linear_params.nominal_offset) << "\n";
  }
  o << "\n[variant]\n";
  o << "kind = " << variant_kind << "\n";
  if (filter_enabled()) {
    o << "alpha_chain = " << join(alpha_chain) << "\n";
    if (beta_gain) o << "beta = " << num(*beta_gain) << "\n";
    o << "sigma = " << num(sigma) << "\n";
    if (delta0) o << "delta0 = " << num(*delta0) << "\n";
    o << "epsd_policy = " << epsd_policy << "\n";
    if (epsd_policy == "constant") o << "epsd_value = " << num(epsd_value) << "\n";
    if (epsd_policy == "decaying") {
      o << "epsd_eps0 = " << num(epsd_eps0) << "\n";
      o << "epsd_rate = " << num(epsd_rate) << "\n";
      o << "epsd_epsinf = " << num(epsd_epsinf) << "\n";
    }
  }
  o << "\n[disturbance]\n";
  o << "kind = " << disturbance_kind << "\n";
  if (disturbance_kind == "constant") o << "value = " << num(dist_value) << "\n";
  if (disturbance_kind == "sine") {
    o << "amp = " << num(dist_amp) << "\n";
    o << "freq = " << num(dist_freq) << "\n";
    o << "phase = " << num(dist_phase) << "\n";
  }
  if (disturbance_kind == "sum_of_sines") {
    o << "amps = " << join(dist_amps) << "\n";
    o << "freqs = " << join(dist_freqs) << "\n";
    o << "phases = " << join(dist_phases) << "\n";
  }
  if (disturbance_kind == "uniform_hold") {
    o << "amp = " << num(dist_amp) << "\n";
    o << "hold_dt = " << num(dist_hold_dt) << "\n";
  }
  o << "\n[simulation]\n";
  o << "initial_state = " << join(initial_state) << "\n";
  o << "dt = " << num(dt) << "\n";
  o << "horizon = " << num(horizon) << "\n";
  if (input_min) o << "input_min = " << num(*input_min) << "\n";
  if (input_max) o << "input_max = " << num(*input_max) << "\n";
  o << "seed = " << seed << "\n";
  o << "\n[observer]\n";
  o << "enabled = " << (observer_enabled ? "true" : "false") << "\n";
  if (observer_enabled) {
    o << "gain = " << num(observer_gain) << "\n";
    o << "init = " << num(observer_init) << "\n";
  }
  if (!output_path.empty()) {
    o << "\n[output]\n";
    o << "path = " << output_path << "\n";
  }
  return o.str();
}

void ScenarioConfig::set_numeric(const std::string& dotted_path, double value) {
  const auto it = schema().find(dotted_path);
  if (it == schema().end())
    throw ConfigError("sweep: unknown config key '" + dotted_path + "'");
  if (it->second != Leaf::Num && it->second != Leaf::UInt)
    throw ConfigError("sweep: key '" + dotted_path + "' is not a numeric leaf");
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  apply_entry(*this, dotted_path, buf, "<sweep override '" + dotted_path + "'>");
}

}  // namespace rrcbf
