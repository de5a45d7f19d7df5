#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plepair/couplings.hpp"
#include "plepair/geometry.hpp"

namespace plepair {

/// Full simulation configuration as read from a JSON document.
/// Unknown keys are a hard error; see README for the schema.
struct SimConfig {
  PairParams params;
  GeometryConfig geometry;
  std::optional<double> omega0_over_gamma1{};

  std::optional<double> detuning_min{}, detuning_max{};
  std::optional<int> detuning_steps{};
  std::optional<double> theta_min{}, theta_max{};
  std::optional<int> theta_steps{};

  double t_max = 200.0;  ///< time-evolution oracle override
  double dt = 1e-3;      ///< time-evolution oracle override

  /// Grid accessors; throw ConfigError naming the missing/invalid key.
  std::vector<double> detuning_grid() const;
  std::vector<double> theta_grid() const;
};

/// Parses and validates the JSON text of a config document.
SimConfig parse_config(const std::string& json_text);

/// Reads, parses and validates a config file.
SimConfig load_config(const std::string& path);

}  // namespace plepair
