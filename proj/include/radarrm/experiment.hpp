#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "radarrm/scenario.hpp"

namespace radarrm {

/// Configuration-file problem; the message names the offending key.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat JSON experiment configuration. Every key has a default; unknown keys
/// are rejected so typos cannot silently change an experiment.
struct ExperimentConfig {
  ScenarioParams scenario;
  int n_runs = 100;
  std::uint64_t base_seed = 1;
  int workers = 1;
  std::string out_dir = "out";

  bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const ExperimentConfig& config);

/// FNV-1a 64 over the canonical serialization, as a hex string.
std::string config_hash(const ExperimentConfig& config);

}  // namespace radarrm
