#include "radarrm/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include "json.hpp"
#include "radarrm/format.hpp"
#include "radarrm/optimizer.hpp"
#include "radarrm/scenario.hpp"
#include "radarrm/scheduler.hpp"

namespace radarrm {

namespace {

// %.12g hides one-ulp arithmetic residue in console output; files keep the
// full round-trip representation from format_double.
std::string pretty(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::string(buf);
}

JobList single_job_list(double resource, double utility) {
  JobList list;
  list.jobs.push_back(base_configuration());
  Configuration c;
  c.id = 1;
  c.dwell_time = resource;  // nominal: one dwell per second of horizon
  c.revisit_interval = 1.0;
  c.resource = resource;
  c.utility = utility;
  list.jobs.push_back(c);
  return list;
}

const char* list_name(ListKind k) { return k == ListKind::Standard ? "standard" : "alternative"; }

void print_upgrade_log(const AllocationResult& result, std::ostream& out) {
  for (const UpgradeRecord& r : result.upgrade_log) {
    out << "  T" << r.task_id << ": " << list_name(r.from_list) << "[" << r.from_index << "] -> "
        << list_name(r.to_list) << "[" << r.to_index << "]  du=" << pretty(r.delta_utility)
        << " dr=" << pretty(r.delta_resource) << "\n";
  }
}

std::string allocation_to_json(const AllocationResult& result, std::span<const Task> tasks,
                               const RunResult& run) {
  nlohmann::ordered_json j;
  j["strategy"] = std::string(strategy_name(run.strategy));
  j["allocated_utility"] = result.total_utility;
  j["realized_utility"] = run.realized_utility;
  j["baseline_utility"] = run.baseline_utility;
  j["normalized"] = run.normalized;
  j["initial_budget"] = {{"r_i", result.initial.r_i}, {"r_ni", result.initial.r_ni}};
  j["remaining_budget"] = {{"r_i", result.remaining.r_i}, {"r_ni", result.remaining.r_ni}};
  auto& states = j["states"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const AllocationState& s = result.states[i];
    states.push_back({{"task", tasks[i].id},
                      {"active_list", list_name(s.active_list)},
                      {"held_list", list_name(s.held_list)},
                      {"held_index", s.held_index},
                      {"flag_non_interfered", s.flag_non_interfered},
                      {"draw_i", s.draw_i},
                      {"draw_ni", s.draw_ni}});
  }
  auto& log = j["upgrade_log"] = nlohmann::ordered_json::array();
  for (const UpgradeRecord& r : result.upgrade_log) {
    log.push_back({{"task", r.task_id},
                   {"from_list", list_name(r.from_list)},
                   {"from_index", r.from_index},
                   {"to_list", list_name(r.to_list)},
                   {"to_index", r.to_index},
                   {"delta_utility", r.delta_utility},
                   {"delta_resource", r.delta_resource}});
  }
  return j.dump(2);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::string metadata_json(const ExperimentConfig& config, std::uint64_t seed, int n_runs) {
  nlohmann::ordered_json j;
  j["generator"] = std::string(kGeneratorId);
  j["config_hash"] = config_hash(config);
  j["base_seed"] = seed;
  j["n_runs"] = n_runs;
  return j.dump(2);
}

}  // namespace

std::vector<Task> example_tasks() {
  std::vector<Task> tasks(3);

  tasks[0].id = 1;
  tasks[0].prone = true;
  tasks[0].standard_list = single_job_list(0.3, 0.6);
  tasks[0].alternative_list = single_job_list(0.3, 0.4);
  tasks[0].d_alt = 0.4 / 0.6;
  tasks[0].d_std = 0.0;

  tasks[1].id = 2;
  tasks[1].prone = true;
  tasks[1].standard_list = single_job_list(0.3, 0.9);
  tasks[1].alternative_list = single_job_list(0.3, 0.6);
  tasks[1].d_alt = 0.6 / 0.9;
  tasks[1].d_std = 0.0;

  tasks[2].id = 3;
  tasks[2].prone = false;
  tasks[2].standard_list = single_job_list(0.3, 0.8);

  return tasks;
}

InterferencePattern example_pattern() {
  InterferencePattern pattern;
  pattern.horizon = 1.0;
  pattern.active_intervals.push_back({0.0, 0.6});
  return pattern;
}

int cmd_example(std::ostream& out) {
  const std::vector<Task> tasks = example_tasks();
  const InterferencePattern pattern = example_pattern();
  const ResourceBudget budget = partition_budget(pattern);

  out << "budget (R_i, R_ni) = (" << pretty(budget.r_i) << ", " << pretty(budget.r_ni) << ")\n";
  const AllocationResult result = allocate_interference_aware(tasks, budget);
  out << "upgrade log:\n";
  print_upgrade_log(result, out);
  out << "total utility " << pretty(result.total_utility) << "\n";
  out << "remaining budget (" << pretty(result.remaining.r_i) << ", "
      << pretty(result.remaining.r_ni) << ")\n";

  // A system that always falls back to mitigated configurations for every
  // prone task.
  std::vector<Task> forced = tasks;
  for (Task& t : forced) {
    if (!t.prone) continue;
    t.standard_list = t.alternative_list;
    t.alternative_list = JobList{};
    t.prone = false;
  }
  const AllocationResult traditional = classic_allocate(forced, 1.0);
  out << "all-alternative fallback utility " << pretty(traditional.total_utility) << "\n";

  int failures = 0;
  auto expect = [&](bool ok, const std::string& what, const std::string& want,
                    const std::string& got) {
    if (ok) return;
    ++failures;
    out << "MISMATCH " << what << ": expected " << want << ", got " << got << "\n";
  };
  expect(std::abs(result.total_utility - 2.1) <= 1e-12, "total utility", "2.1",
         pretty(result.total_utility));
  expect(std::abs(traditional.total_utility - 1.8) <= 1e-12, "all-alternative utility", "1.8",
         pretty(traditional.total_utility));
  expect(result.remaining.r_i == 0.0 && std::abs(result.remaining.r_ni - 0.1) <= 1e-12,
         "remaining budget", "(0, 0.1)",
         "(" + pretty(result.remaining.r_i) + ", " + pretty(result.remaining.r_ni) + ")");
  expect(result.states[1].flag_non_interfered, "T2 flag", "non-interfered", "unflagged");
  expect(result.states[0].active_list == ListKind::Alternative &&
             result.states[0].held_list == ListKind::Alternative,
         "T1 list", "alternative", "standard");
  expect(result.states[2].draw_i > 0.0 && result.states[2].draw_ni == 0.0, "T3 draw", "from R_i",
         "(" + pretty(result.states[2].draw_i) + ", " + pretty(result.states[2].draw_ni) + ")");
  return failures == 0 ? 0 : 1;
}

int cmd_run(const ExperimentConfig& config, std::uint64_t seed,
            const std::filesystem::path& out_dir, std::ostream& out) {
  std::filesystem::create_directories(out_dir);
  const Scenario scenario = generate_scenario(seed, config.scenario);

  std::vector<MonteCarloRecord> records;
  for (StrategyKind strategy : kAllStrategies) {
    const StrategyOutcome outcome = run_strategy_full(scenario, strategy);
    const RunResult& r = outcome.result;
    records.push_back(MonteCarloRecord{0, strategy, r.allocated_utility, r.realized_utility,
                                       r.baseline_utility, r.normalized});
    const std::string name(strategy_name(strategy));
    write_file(out_dir / ("allocation_" + name + ".json"),
               allocation_to_json(outcome.allocation, outcome.tasks, r));
    write_file(out_dir / ("schedule_" + name + ".json"), schedule_to_json(outcome.schedule));
    out << name << ": allocated " << pretty(r.allocated_utility) << ", realized "
        << pretty(r.realized_utility) << ", normalized " << pretty(r.normalized) << "\n";
  }
  write_file(out_dir / "run.csv", per_run_csv(records));
  write_file(out_dir / "metadata.json", metadata_json(config, seed, 1));
  return 0;
}

int cmd_montecarlo(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                   int workers, std::ostream& out) {
  std::filesystem::create_directories(out_dir);
  const MonteCarloResult mc = monte_carlo(config.scenario, config.n_runs, config.base_seed, workers);
  write_file(out_dir / "runs.csv", per_run_csv(mc.records));
  write_file(out_dir / "summary.csv", summary_csv(mc));
  write_file(out_dir / "metadata.json", metadata_json(config, config.base_seed, config.n_runs));

  out << "normalized utility over " << config.n_runs << " runs\n";
  char line[160];
  std::snprintf(line, sizeof(line), "  %-28s %8s %8s %8s %8s\n", "strategy", "mean", "std", "min",
                "max");
  out << line;
  for (const StrategyStats& s : mc.stats) {
    std::snprintf(line, sizeof(line), "  %-28s %8.4f %8.4f %8.4f %8.4f\n",
                  std::string(strategy_name(s.strategy)).c_str(), s.mean, s.stddev, s.min, s.max);
    out << line;
  }
  return 0;
}

}  // namespace radarrm
