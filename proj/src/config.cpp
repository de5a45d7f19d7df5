#include "plepair/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "plepair/errors.hpp"
#include "plepair/spectra.hpp"

namespace plepair {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "gamma1", "mu", "gamma2", "delta_omega", "rabi1", "rabi2", "detuning",
      "xi", "theta", "phi", "psi", "r12_lambda", "r_detector_lambda",
      "omega0_over_gamma1", "detuning_min", "detuning_max", "detuning_steps",
      "theta_min", "theta_max", "theta_steps", "t_max", "dt"};
  return keys;
}

double as_number(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

double require(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing required key '" + key + "'");
  return as_number(j, key);
}

void read_opt(const json& j, const std::string& key, std::optional<double>& out) {
  if (j.contains(key)) out = as_number(j, key);
}

void read_opt(const json& j, const std::string& key, double& out) {
  if (j.contains(key)) out = as_number(j, key);
}

void read_opt_int(const json& j, const std::string& key, std::optional<int>& out) {
  if (!j.contains(key)) return;
  const double v = as_number(j, key);
  if (v != std::floor(v) || v < 1 || v > 1e9) {
    throw ConfigError("config key '" + key + "' must be a positive integer");
  }
  out = static_cast<int>(v);
}

std::vector<double> make_grid(const std::optional<double>& lo, const std::optional<double>& hi,
                              const std::optional<int>& steps, const std::string& prefix) {
  if (!lo) throw ConfigError("missing required key '" + prefix + "_min'");
  if (!hi) throw ConfigError("missing required key '" + prefix + "_max'");
  if (!steps) throw ConfigError("missing required key '" + prefix + "_steps'");
  if (!(*hi > *lo)) {
    throw ConfigError("'" + prefix + "_max' must exceed '" + prefix + "_min'");
  }
  if (*steps < 2) throw ConfigError("'" + prefix + "_steps' must be at least 2");
  return linspace(*lo, *hi, *steps);
}

}  // namespace

std::vector<double> SimConfig::detuning_grid() const {
  return make_grid(detuning_min, detuning_max, detuning_steps, "detuning");
}

std::vector<double> SimConfig::theta_grid() const {
  return make_grid(theta_min, theta_max, theta_steps, "theta");
}

SimConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  for (const auto& item : j.items()) {
    if (!known_keys().count(item.key())) {
      throw ConfigError("unknown config key '" + item.key() + "'");
    }
  }

  SimConfig cfg;
  read_opt(j, "gamma1", cfg.params.gamma1);
  read_opt(j, "mu", cfg.params.mu);
  read_opt(j, "gamma2", cfg.params.gamma2_override);
  read_opt(j, "delta_omega", cfg.params.delta_omega);
  read_opt(j, "rabi1", cfg.params.rabi1);
  read_opt(j, "rabi2", cfg.params.rabi2_override);
  read_opt(j, "detuning", cfg.params.detuning);

  cfg.geometry.xi = require(j, "xi");
  cfg.geometry.theta = require(j, "theta");
  cfg.geometry.phi = require(j, "phi");
  read_opt(j, "psi", cfg.geometry.psi);
  cfg.geometry.r12_lambda = require(j, "r12_lambda");
  read_opt(j, "r_detector_lambda", cfg.geometry.r_detector_lambda);

  read_opt(j, "omega0_over_gamma1", cfg.omega0_over_gamma1);
  read_opt(j, "detuning_min", cfg.detuning_min);
  read_opt(j, "detuning_max", cfg.detuning_max);
  read_opt_int(j, "detuning_steps", cfg.detuning_steps);
  read_opt(j, "theta_min", cfg.theta_min);
  read_opt(j, "theta_max", cfg.theta_max);
  read_opt_int(j, "theta_steps", cfg.theta_steps);
  read_opt(j, "t_max", cfg.t_max);
  read_opt(j, "dt", cfg.dt);

  if (cfg.geometry.r_detector_lambda && !cfg.omega0_over_gamma1) {
    throw ConfigError("'omega0_over_gamma1' is required when 'r_detector_lambda' is set");
  }

  cfg.params.validate();
  cfg.geometry.validate();
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace plepair
