#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "radarrm/joblist.hpp"
#include "radarrm/model.hpp"
#include "radarrm/optimizer.hpp"
#include "radarrm/scheduler.hpp"

namespace radarrm {

struct TargetType {
  std::string name;
  double revisit_scale = 1.0;  // seconds; revisit grid = factors x this
  double weight = 1.0;         // importance multiplier applied to utilities

  bool operator==(const TargetType&) const = default;
};

struct TargetInstance {
  double azimuth_deg = 0.0;
  double range_m = 0.0;
  double speed_mps = 0.0;
  int type = 0;
};

/// Everything needed to draw one scenario; defaults reproduce the reference
/// setup (100 targets over 90 deg, a 50 deg interferer sector, duty 0.7).
struct ScenarioParams {
  int target_count = 100;
  double sector_lo_deg = 20.0;
  double sector_hi_deg = 70.0;
  double duty = 0.7;
  double min_segment = 0.05;  // seconds
  double max_segment = 0.2;   // seconds
  double horizon = 1.0;       // seconds
  double chunk = 0.005;       // seconds
  std::vector<double> dwell_choices{0.001, 0.002, 0.004, 0.008};  // seconds
  std::vector<double> revisit_factors{0.25, 0.5, 1.0, 2.0};       // x revisit_scale
  std::vector<TargetType> target_types{
      {"fast", 1.0, 2.0}, {"medium", 2.0, 1.5}, {"slow", 4.0, 1.0}};
  double dwell_saturation = 0.002;  // seconds; quality model time constant
  double d_std_lo = 0.0, d_std_hi = 0.3;  // interfered-standard utility factor range
  double d_alt_lo = 0.3, d_alt_hi = 0.9;  // alternative-config utility factor range

  bool operator==(const ScenarioParams&) const = default;
};

struct Scenario {
  std::uint64_t seed = 0;
  double sector_lo_deg = 0.0;
  double sector_hi_deg = 0.0;
  std::vector<TargetInstance> targets;
  InterferencePattern pattern;
  std::vector<Task> tasks;  // tasks[i] tracks targets[i]
  double horizon = 1.0;
  double chunk = 0.005;
};

enum class StrategyKind {
  UnawareNoMitigation,
  AwareNoMitigation,
  StandardMitigation,
  CognitiveMitigation,
};

inline constexpr std::array<StrategyKind, 4> kAllStrategies{
    StrategyKind::UnawareNoMitigation, StrategyKind::AwareNoMitigation,
    StrategyKind::StandardMitigation, StrategyKind::CognitiveMitigation};

std::string_view strategy_name(StrategyKind kind);

/// Tracking quality in [0, 1): saturating in dwell, falling off with revisit.
double config_quality(double dwell, double revisit, double revisit_scale, double saturation);

/// Utility = weight x quality.
double config_utility(double dwell, double revisit, const TargetType& type, double weight,
                      double saturation = 0.002);

/// Deterministic scenario draw. The generator is mt19937_64 with a 53-bit
/// uniform mapping ("mt19937_64-u53" in output metadata); the draw order is
/// targets, interference pattern, per-prone-task degradation factors.
Scenario generate_scenario(std::uint64_t seed, const ScenarioParams& params);

inline constexpr std::string_view kGeneratorId = "mt19937_64-u53";

struct RunResult {
  StrategyKind strategy = StrategyKind::UnawareNoMitigation;
  double allocated_utility = 0.0;
  double realized_utility = 0.0;
  double baseline_utility = 0.0;
  double normalized = 0.0;  // realized / baseline
};

/// RunResult plus the artifacts it was computed from.
struct StrategyOutcome {
  RunResult result;
  AllocationResult allocation;
  Schedule schedule;
  std::vector<Task> tasks;  // the task view the allocation ran against
};

/// Total utility of the interference-free allocation (classical greedy on the
/// standard lists with the whole time budget); comparison baseline.
double baseline_utility(const Scenario& scenario);

RunResult run_strategy(const Scenario& scenario, StrategyKind strategy);
StrategyOutcome run_strategy_full(const Scenario& scenario, StrategyKind strategy);

struct MonteCarloRecord {
  int run = 0;
  StrategyKind strategy = StrategyKind::UnawareNoMitigation;
  double allocated = 0.0;
  double realized = 0.0;
  double baseline = 0.0;
  double normalized = 0.0;
};

struct StrategyStats {
  StrategyKind strategy = StrategyKind::UnawareNoMitigation;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  double min = 0.0;
  double max = 0.0;
};

struct MonteCarloResult {
  std::vector<MonteCarloRecord> records;  // ordered by (run, strategy)
  std::array<StrategyStats, 4> stats;
};

/// Run k uses seed base_seed + k; results are identical for any worker count.
MonteCarloResult monte_carlo(const ScenarioParams& params, int n_runs, std::uint64_t base_seed,
                             int workers = 1);

std::string per_run_csv(const std::vector<MonteCarloRecord>& records);
std::string summary_csv(const MonteCarloResult& result);

}  // namespace radarrm
