#include "radarrm/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "radarrm/format.hpp"

namespace radarrm {

namespace {

// mt19937_64 (the output sequence is pinned by the standard) with the usual
// 53-bit mantissa mapping, so draws are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

void check_params(const ScenarioParams& p) {
  auto bad = [](const std::string& what) { throw std::invalid_argument(what); };
  if (p.target_count < 1) bad("target_count must be at least 1");
  if (!(p.duty >= 0.0 && p.duty <= 1.0)) bad("duty outside [0, 1]");
  if (!(p.sector_lo_deg >= 0.0 && p.sector_hi_deg <= 90.0 && p.sector_lo_deg <= p.sector_hi_deg))
    bad("interferer sector must lie inside [0, 90] degrees");
  if (!(p.horizon > 0.0)) bad("horizon must be positive");
  if (!(p.chunk > 0.0)) bad("chunk must be positive");
  if (!(p.min_segment > 0.0 && p.max_segment >= p.min_segment)) bad("invalid segment length range");
  if (p.dwell_choices.empty() || p.revisit_factors.empty() || p.target_types.empty())
    bad("grid choices and target types must not be empty");
  if (!(p.dwell_saturation > 0.0)) bad("dwell_saturation must be positive");
  if (!(p.d_std_lo >= 0.0 && p.d_std_hi >= p.d_std_lo && p.d_std_hi <= 1.0))
    bad("d_std range outside [0, 1]");
  if (!(p.d_alt_lo >= 0.0 && p.d_alt_hi >= p.d_alt_lo && p.d_alt_hi <= 1.0))
    bad("d_alt range outside [0, 1]");
}

// Equal counts of active and free segments, each family rescaled onto its
// exact total with every segment at least min_segment long.
InterferencePattern make_pattern(Rng& rng, double duty_target, double horizon, double min_segment,
                                 double max_segment) {
  InterferencePattern pattern;
  pattern.horizon = horizon;
  if (duty_target <= 1e-12) return pattern;
  if (duty_target >= 1.0 - 1e-12) {
    pattern.active_intervals.push_back({0.0, horizon});
    return pattern;
  }

  const double total_active = duty_target * horizon;
  const double total_free = horizon - total_active;
  const double mean_segment = 0.5 * (min_segment + max_segment);
  int k = std::max<int>(1, static_cast<int>(std::llround(horizon / (2.0 * mean_segment))));
  k = std::min(k, static_cast<int>(total_active / min_segment));
  k = std::min(k, static_cast<int>(total_free / min_segment));
  k = std::max(k, 1);

  auto family = [&](double total, int count) {
    std::vector<double> draw(static_cast<std::size_t>(count));
    double sum = 0.0;
    for (double& d : draw) {
      d = rng.uniform(min_segment, max_segment);
      sum += d;
    }
    const double slack = std::max(total - count * min_segment, 0.0);
    std::vector<double> lengths(draw.size());
    for (std::size_t i = 0; i < draw.size(); ++i)
      lengths[i] = std::min(total, min_segment + slack * draw[i] / sum);
    return lengths;
  };

  const std::vector<double> active = family(total_active, k);
  const std::vector<double> free_t = family(total_free, k);

  double t = 0.0;
  for (int i = 0; i < k; ++i) {
    const double end = std::min(t + active[static_cast<std::size_t>(i)], horizon);
    pattern.active_intervals.push_back({t, end});
    t = end + free_t[static_cast<std::size_t>(i)];
  }
  return pattern;
}

Task build_task(int id, const TargetInstance& target, bool prone, double d_std, double d_alt,
                const ScenarioParams& params) {
  const TargetType& type = params.target_types[static_cast<std::size_t>(target.type)];
  ConfigGrid grid;
  grid.dwell_choices = params.dwell_choices;
  grid.revisit_choices.reserve(params.revisit_factors.size());
  for (double f : params.revisit_factors) grid.revisit_choices.push_back(f * type.revisit_scale);

  auto utility = [&](double dwell, double revisit) {
    return config_utility(dwell, revisit, type, type.weight, params.dwell_saturation);
  };
  Task task;
  task.id = id;
  task.prone = prone;
  task.weight = type.weight;
  task.standard_list = concave_majorant(enumerate_configs(grid, utility));
  if (prone) {
    task.d_std = d_std;
    task.d_alt = d_alt;
    task.alternative_list = make_alternative_list(task.standard_list, d_alt);
  }
  return task;
}

// Prone tasks planned at their interfered value: standard lists scaled by
// d_std, no mitigation options. A zero factor collapses the list to its base
// entry (the task is worthless while interfered and is never upgraded).
std::vector<Task> awareness_views(const std::vector<Task>& tasks) {
  std::vector<Task> views = tasks;
  for (Task& t : views) {
    if (!t.prone) continue;
    if (t.d_std > 0.0) {
      t.standard_list = make_alternative_list(t.standard_list, t.d_std);
    } else {
      t.standard_list = JobList{{t.standard_list.jobs.front()}};
    }
    t.alternative_list = JobList{};
    t.prone = false;
  }
  return views;
}

/// Realized value given the schedule: a prone task still on an unprotected
/// standard configuration loses (1 - d_std) of its utility as soon as any of
/// its dwells overlaps active interference; everything else realizes what it
/// was allocated.
double realized_utility(std::span<const Task> tasks, const AllocationResult& alloc,
                        const Schedule& schedule, const InterferencePattern& pattern) {
  std::vector<char> hit(tasks.size(), 0);
  const std::vector<bool> interfered = overlap_report(schedule, pattern);
  for (std::size_t j = 0; j < schedule.dwells.size(); ++j) {
    if (!interfered[j]) continue;
    const int id = schedule.dwells[j].task_id;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (tasks[i].id == id) {
        hit[i] = 1;
        break;
      }
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const AllocationState& s = alloc.states[i];
    double u = held_config(tasks[i], s).utility;
    if (u <= 0.0) continue;
    if (classify_dwells(tasks[i], s) == DwellClass::StandardUnaware && hit[i])
      u *= tasks[i].d_std;
    total += u;
  }
  return total;
}

}  // namespace

std::string_view strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::UnawareNoMitigation: return "unaware_no_mitigation";
    case StrategyKind::AwareNoMitigation: return "aware_no_mitigation";
    case StrategyKind::StandardMitigation: return "standard_mitigation";
    case StrategyKind::CognitiveMitigation: return "cognitive_mitigation";
  }
  return "unknown";
}

double config_quality(double dwell, double revisit, double revisit_scale, double saturation) {
  const double ratio = revisit / revisit_scale;
  return (1.0 - std::exp(-dwell / saturation)) / (1.0 + ratio * ratio);
}

double config_utility(double dwell, double revisit, const TargetType& type, double weight,
                      double saturation) {
  return weight * config_quality(dwell, revisit, type.revisit_scale, saturation);
}

Scenario generate_scenario(std::uint64_t seed, const ScenarioParams& params) {
  check_params(params);
  Rng rng(seed);

  Scenario scenario;
  scenario.seed = seed;
  scenario.sector_lo_deg = params.sector_lo_deg;
  scenario.sector_hi_deg = params.sector_hi_deg;
  scenario.horizon = params.horizon;
  scenario.chunk = params.chunk;

  scenario.targets.reserve(static_cast<std::size_t>(params.target_count));
  for (int i = 0; i < params.target_count; ++i) {
    TargetInstance target;
    target.azimuth_deg = rng.uniform(0.0, 90.0);
    target.range_m = rng.uniform(5'000.0, 150'000.0);
    target.speed_mps = rng.uniform(50.0, 600.0);
    target.type = rng.uniform_int(static_cast<int>(params.target_types.size()));
    scenario.targets.push_back(target);
  }

  scenario.pattern =
      make_pattern(rng, params.duty, params.horizon, params.min_segment, params.max_segment);

  scenario.tasks.reserve(scenario.targets.size());
  for (int i = 0; i < params.target_count; ++i) {
    const TargetInstance& target = scenario.targets[static_cast<std::size_t>(i)];
    const bool in_sector =
        target.azimuth_deg >= params.sector_lo_deg && target.azimuth_deg <= params.sector_hi_deg;
    const bool prone = in_sector && params.duty > 0.0;
    double d_std = 0.0, d_alt = 0.0;
    if (prone) {
      d_std = rng.uniform(params.d_std_lo, params.d_std_hi);
      d_alt = rng.uniform(params.d_alt_lo, params.d_alt_hi);
    }
    scenario.tasks.push_back(build_task(i, target, prone, d_std, d_alt, params));
  }
  return scenario;
}

double baseline_utility(const Scenario& scenario) {
  return classic_allocate(scenario.tasks, 1.0).total_utility;
}

StrategyOutcome run_strategy_full(const Scenario& scenario, StrategyKind strategy) {
  StrategyOutcome out;
  out.result.strategy = strategy;
  out.result.baseline_utility = baseline_utility(scenario);

  switch (strategy) {
    case StrategyKind::UnawareNoMitigation: {
      out.tasks = scenario.tasks;
      out.allocation = classic_allocate(out.tasks, 1.0);
      out.schedule = build_schedule(out.allocation, out.tasks, scenario.pattern,
                                    {scenario.chunk, /*use_interference_knowledge=*/false});
      break;
    }
    case StrategyKind::AwareNoMitigation: {
      // Knowledge without mitigation: prone work is planned at its interfered
      // value, which steers the budget toward tasks outside the interfered
      // sector. Execution timing stays uncontrolled, so realized value still
      // depends on where prone dwells actually land.
      out.tasks = scenario.tasks;
      const std::vector<Task> views = awareness_views(scenario.tasks);
      out.allocation = classic_allocate(views, 1.0);
      out.schedule = build_schedule(out.allocation, out.tasks, scenario.pattern,
                                    {scenario.chunk, /*use_interference_knowledge=*/false});
      break;
    }
    case StrategyKind::StandardMitigation: {
      // Every prone task runs mitigated: allocate classically with the
      // alternative lists standing in for the standard ones.
      out.tasks = scenario.tasks;
      std::vector<Task> forced = scenario.tasks;
      for (Task& t : forced) {
        if (!t.prone) continue;
        t.standard_list = t.alternative_list;
        t.alternative_list = JobList{};
        t.prone = false;
      }
      out.allocation = classic_allocate(forced, 1.0);
      for (std::size_t i = 0; i < out.tasks.size(); ++i) {
        if (!out.tasks[i].prone) continue;
        AllocationState& s = out.allocation.states[i];
        s.active_list = s.held_list = ListKind::Alternative;
        for (UpgradeRecord& r : out.allocation.upgrade_log) {
          if (r.task_id != out.tasks[i].id) continue;
          r.from_list = r.to_list = ListKind::Alternative;
        }
      }
      out.schedule = build_schedule(out.allocation, out.tasks, scenario.pattern,
                                    {scenario.chunk, /*use_interference_knowledge=*/false});
      break;
    }
    case StrategyKind::CognitiveMitigation: {
      out.tasks = scenario.tasks;
      out.allocation =
          allocate_interference_aware(out.tasks, partition_budget(scenario.pattern));
      out.schedule = build_schedule(out.allocation, out.tasks, scenario.pattern,
                                    {scenario.chunk, /*use_interference_knowledge=*/true});
      break;
    }
  }

  out.result.allocated_utility = out.allocation.total_utility;
  out.result.realized_utility =
      realized_utility(out.tasks, out.allocation, out.schedule, scenario.pattern);
  out.result.normalized = out.result.realized_utility / out.result.baseline_utility;
  return out;
}

RunResult run_strategy(const Scenario& scenario, StrategyKind strategy) {
  return run_strategy_full(scenario, strategy).result;
}

MonteCarloResult monte_carlo(const ScenarioParams& params, int n_runs, std::uint64_t base_seed,
                             int workers) {
  if (n_runs < 1) throw std::invalid_argument("n_runs must be at least 1");
  check_params(params);

  MonteCarloResult result;
  result.records.resize(static_cast<std::size_t>(n_runs) * kAllStrategies.size());

  auto run_one = [&](int k) {
    const Scenario scenario = generate_scenario(base_seed + static_cast<std::uint64_t>(k), params);
    for (std::size_t si = 0; si < kAllStrategies.size(); ++si) {
      const RunResult r = run_strategy(scenario, kAllStrategies[si]);
      result.records[static_cast<std::size_t>(k) * kAllStrategies.size() + si] =
          MonteCarloRecord{k,
                           r.strategy,
                           r.allocated_utility,
                           r.realized_utility,
                           r.baseline_utility,
                           r.normalized};
    }
  };

  workers = std::clamp(workers, 1, n_runs);
  if (workers == 1) {
    for (int k = 0; k < n_runs; ++k) run_one(k);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int k = w; k < n_runs; k += workers) run_one(k);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t si = 0; si < kAllStrategies.size(); ++si) {
    StrategyStats stats;
    stats.strategy = kAllStrategies[si];
    stats.min = std::numeric_limits<double>::infinity();
    stats.max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int k = 0; k < n_runs; ++k) {
      const double x =
          result.records[static_cast<std::size_t>(k) * kAllStrategies.size() + si].normalized;
      sum += x;
      stats.min = std::min(stats.min, x);
      stats.max = std::max(stats.max, x);
    }
    stats.mean = sum / n_runs;
    double sq = 0.0;
    for (int k = 0; k < n_runs; ++k) {
      const double x =
          result.records[static_cast<std::size_t>(k) * kAllStrategies.size() + si].normalized;
      sq += (x - stats.mean) * (x - stats.mean);
    }
    stats.stddev = std::sqrt(sq / n_runs);
    result.stats[si] = stats;
  }
  return result;
}

std::string per_run_csv(const std::vector<MonteCarloRecord>& records) {
  std::string out = "run,strategy,allocated,realized,baseline,normalized\n";
  for (const MonteCarloRecord& r : records) {
    out += std::to_string(r.run);
    out += ',';
    out += strategy_name(r.strategy);
    out += ',';
    out += format_double(r.allocated);
    out += ',';
    out += format_double(r.realized);
    out += ',';
    out += format_double(r.baseline);
    out += ',';
    out += format_double(r.normalized);
    out += '\n';
  }
  return out;
}

std::string summary_csv(const MonteCarloResult& result) {
  std::string out = "strategy,mean,std,min,max\n";
  for (const StrategyStats& s : result.stats) {
    out += strategy_name(s.strategy);
    out += ',';
    out += format_double(s.mean);
    out += ',';
    out += format_double(s.stddev);
    out += ',';
    out += format_double(s.min);
    out += ',';
    out += format_double(s.max);
    out += '\n';
  }
  return out;
}

}  // namespace radarrm
