#include "radarrm/experiment.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace radarrm {

namespace {

using nlohmann::ordered_json;

double require_number(const ordered_json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

int require_int(const ordered_json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
  return v.get<int>();
}

std::vector<double> require_number_array(const ordered_json& v, const std::string& key) {
  if (!v.is_array() || v.empty()) throw ConfigError("config key '" + key + "' must be a non-empty array");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(require_number(e, key));
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  ExperimentConfig c;
  ScenarioParams& s = c.scenario;
  for (const auto& [key, value] : j.items()) {
    if (key == "target_count") {
      s.target_count = require_int(value, key);
    } else if (key == "sector_lo_deg") {
      s.sector_lo_deg = require_number(value, key);
    } else if (key == "sector_hi_deg") {
      s.sector_hi_deg = require_number(value, key);
    } else if (key == "duty") {
      s.duty = require_number(value, key);
    } else if (key == "min_segment_ms") {
      s.min_segment = require_number(value, key) / 1000.0;
    } else if (key == "max_segment_ms") {
      s.max_segment = require_number(value, key) / 1000.0;
    } else if (key == "horizon_s") {
      s.horizon = require_number(value, key);
    } else if (key == "chunk_s") {
      s.chunk = require_number(value, key);
    } else if (key == "dwell_choices_ms") {
      s.dwell_choices.clear();
      for (double d : require_number_array(value, key)) s.dwell_choices.push_back(d / 1000.0);
    } else if (key == "revisit_factors") {
      s.revisit_factors = require_number_array(value, key);
    } else if (key == "target_types") {
      if (!value.is_array() || value.empty())
        throw ConfigError("config key 'target_types' must be a non-empty array");
      s.target_types.clear();
      for (const auto& entry : value) {
        if (!entry.is_object() || !entry.contains("name") || !entry.contains("revisit_scale_s") ||
            !entry.contains("weight"))
          throw ConfigError("config key 'target_types' entries need name, revisit_scale_s, weight");
        TargetType t;
        if (!entry["name"].is_string()) throw ConfigError("config key 'target_types' name must be a string");
        t.name = entry["name"].get<std::string>();
        t.revisit_scale = require_number(entry["revisit_scale_s"], "target_types.revisit_scale_s");
        t.weight = require_number(entry["weight"], "target_types.weight");
        s.target_types.push_back(t);
      }
    } else if (key == "dwell_saturation_ms") {
      s.dwell_saturation = require_number(value, key) / 1000.0;
    } else if (key == "n_runs") {
      c.n_runs = require_int(value, key);
    } else if (key == "base_seed") {
      if (!value.is_number_integer()) throw ConfigError("config key 'base_seed' must be an integer");
      c.base_seed = value.get<std::uint64_t>();
    } else if (key == "workers") {
      c.workers = require_int(value, key);
    } else if (key == "out_dir") {
      if (!value.is_string()) throw ConfigError("config key 'out_dir' must be a string");
      c.out_dir = value.get<std::string>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  if (c.n_runs < 1) throw ConfigError("config key 'n_runs' must be at least 1");
  if (c.workers < 1) throw ConfigError("config key 'workers' must be at least 1");
  if (s.target_count < 1) throw ConfigError("config key 'target_count' must be at least 1");
  if (!(s.duty >= 0.0 && s.duty <= 1.0)) throw ConfigError("config key 'duty' must lie in [0, 1]");
  if (!(s.sector_lo_deg >= 0.0 && s.sector_hi_deg <= 90.0 && s.sector_lo_deg <= s.sector_hi_deg))
    throw ConfigError("config keys 'sector_lo_deg'/'sector_hi_deg' must span a range inside [0, 90]");
  if (!(s.horizon > 0.0)) throw ConfigError("config key 'horizon_s' must be positive");
  if (!(s.chunk > 0.0)) throw ConfigError("config key 'chunk_s' must be positive");
  if (!(s.min_segment > 0.0)) throw ConfigError("config key 'min_segment_ms' must be positive");
  if (!(s.max_segment >= s.min_segment))
    throw ConfigError("config key 'max_segment_ms' must be at least min_segment_ms");
  if (!(s.dwell_saturation > 0.0)) throw ConfigError("config key 'dwell_saturation_ms' must be positive");
  for (double d : s.dwell_choices)
    if (!(d > 0.0)) throw ConfigError("config key 'dwell_choices_ms' entries must be positive");
  for (double f : s.revisit_factors)
    if (!(f > 0.0)) throw ConfigError("config key 'revisit_factors' entries must be positive");
  for (const TargetType& t : s.target_types)
    if (!(t.revisit_scale > 0.0) || !(t.weight > 0.0))
      throw ConfigError("config key 'target_types' entries must have positive revisit_scale_s and weight");
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& config) {
  const ScenarioParams& s = config.scenario;
  ordered_json j;
  j["target_count"] = s.target_count;
  j["sector_lo_deg"] = s.sector_lo_deg;
  j["sector_hi_deg"] = s.sector_hi_deg;
  j["duty"] = s.duty;
  j["min_segment_ms"] = s.min_segment * 1000.0;
  j["max_segment_ms"] = s.max_segment * 1000.0;
  j["horizon_s"] = s.horizon;
  j["chunk_s"] = s.chunk;
  auto& dwells = j["dwell_choices_ms"] = ordered_json::array();
  for (double d : s.dwell_choices) dwells.push_back(d * 1000.0);
  j["revisit_factors"] = s.revisit_factors;
  auto& types = j["target_types"] = ordered_json::array();
  for (const TargetType& t : s.target_types)
    types.push_back({{"name", t.name}, {"revisit_scale_s", t.revisit_scale}, {"weight", t.weight}});
  j["dwell_saturation_ms"] = s.dwell_saturation * 1000.0;
  j["n_runs"] = config.n_runs;
  j["base_seed"] = config.base_seed;
  j["workers"] = config.workers;
  j["out_dir"] = config.out_dir;
  return j.dump(2);
}

std::string config_hash(const ExperimentConfig& config) {
  const std::string text = serialize_config(config);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace radarrm
