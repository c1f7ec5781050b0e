// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "radarrm/commands.hpp"
#include "radarrm/experiment.hpp"
#include "radarrm/model.hpp"
#include "radarrm/optimizer.hpp"
#include "radarrm/scenario.hpp"
#include "radarrm/scheduler.hpp"
#include "test_helpers.hpp"

using namespace radarrm;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %-22s %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct ReferenceRun {
  Scenario scenario;
  std::array<StrategyOutcome, 4> outcomes;
};

std::vector<ReferenceRun> reference_sweep(int n_runs, std::uint64_t base_seed) {
  const ScenarioParams params;
  std::vector<ReferenceRun> runs;
  runs.reserve(static_cast<std::size_t>(n_runs));
  for (int k = 0; k < n_runs; ++k) {
    ReferenceRun run;
    run.scenario = generate_scenario(base_seed + static_cast<std::uint64_t>(k), params);
    for (std::size_t si = 0; si < kAllStrategies.size(); ++si)
      run.outcomes[si] = run_strategy_full(run.scenario, kAllStrategies[si]);
    runs.push_back(std::move(run));
  }
  return runs;
}

void criterion_example_exact() {
  const std::vector<Task> tasks = test::three_task_instance();

  const auto t0 = Clock::now();
  const AllocationResult result = allocate_interference_aware(tasks, {0.6, 0.4});
  const double elapsed = seconds_since(t0);

  std::vector<Task> forced = tasks;
  for (Task& t : forced) {
    if (!t.prone) continue;
    t.standard_list = t.alternative_list;
    t.alternative_list = JobList{};
    t.prone = false;
  }
  const AllocationResult counterfactual = classic_allocate(forced, 1.0);

  const double tol = 1e-12;
  bool pass = true;
  std::string why;
  auto need = [&](bool ok, const char* what) {
    if (!ok && pass) {
      pass = false;
      why = what;
    }
  };
  need(std::abs(result.total_utility - 2.1) <= tol, "total utility != 2.1");
  need(result.states[1].flag_non_interfered && result.states[1].draw_i == 0.0,
       "T2 not flagged into R_ni");
  need(result.states[2].draw_i > 0.0 && result.states[2].draw_ni == 0.0, "T3 not on R_i");
  need(result.states[0].held_list == ListKind::Alternative, "T1 not on its alternative list");
  need(result.remaining.r_i == 0.0 && std::abs(result.remaining.r_ni - 0.1) <= tol,
       "remaining budget != (0.0, 0.1)");
  need(std::abs(counterfactual.total_utility - 1.8) <= tol, "all-alternative utility != 1.8");
  need(elapsed < 0.010, "runtime >= 10 ms");

  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "utility %.12g, counterfactual %.12g, remaining (%g, %.12g), %.3f ms%s%s",
                result.total_utility, counterfactual.total_utility, result.remaining.r_i,
                result.remaining.r_ni, elapsed * 1e3, pass ? "" : " -- ", pass ? "" : why.c_str());
  report("example-exact", pass, detail);
}

void criterion_budget_partition() {
  InterferencePattern p6;
  p6.horizon = 1.0;
  p6.active_intervals = {{0.0, 0.6}};
  InterferencePattern p7;
  p7.horizon = 1.0;
  p7.active_intervals = {{0.0, 0.7}};
  const ResourceBudget b6 = partition_budget(p6);
  const ResourceBudget b7 = partition_budget(p7);

  const bool pass = std::abs(b6.r_i - 0.6) <= 1e-12 && std::abs(b6.r_ni - 0.4) <= 1e-12 &&
                    std::abs(b7.r_i - 0.7) <= 1e-12 && std::abs(b7.r_ni - 0.3) <= 1e-12 &&
                    std::abs(b6.total() - 1.0) <= 1e-12 && std::abs(b7.total() - 1.0) <= 1e-12;
  char detail[160];
  std::snprintf(detail, sizeof(detail), "duty 0.6 -> (%g, %g); duty 0.7 -> (%g, %g)", b6.r_i,
                b6.r_ni, b7.r_i, b7.r_ni);
  report("budget-partition", pass, detail);
}

void criterion_oracle_dominance() {
  const auto t0 = Clock::now();
  test::InstanceGen gen(0xac5e97a9);
  const int instances = 250;
  int violations = 0;
  double gap_sum = 0.0, gap_max = 0.0;
  for (int i = 0; i < instances; ++i) {
    const std::vector<Task> tasks = gen.random_tasks(5, 4);
    const ResourceBudget budget = gen.random_budget();
    const AllocationResult greedy = allocate_interference_aware(tasks, budget);
    const AllocationResult best = oracle_allocate(tasks, budget);
    const double gap = best.total_utility - greedy.total_utility;
    if (greedy.total_utility > best.total_utility + 1e-9) ++violations;
    gap_sum += std::max(gap, 0.0);
    gap_max = std::max(gap_max, gap);
    if (!test::check_allocation_invariants(tasks, greedy).empty()) ++violations;
  }
  const double elapsed = seconds_since(t0);
  const bool pass = violations == 0 && elapsed < 30.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%d instances, %d violations, mean gap %.6f, max gap %.6f, %.2f s", instances,
                violations, gap_sum / instances, gap_max, elapsed);
  report("oracle-dominance", pass, detail);
}

void criterion_scheduler_safety(const std::vector<ReferenceRun>& runs) {
  double worst_overlap = 0.0, worst_balance = 0.0;
  for (const ReferenceRun& run : runs) {
    for (const StrategyOutcome& out : run.outcomes) {
      std::map<int, double> placed;
      for (const Dwell& d : out.schedule.dwells) {
        placed[d.task_id] += d.duration;
        if (d.dwell_class == DwellClass::StandardFlagged)
          worst_overlap = std::max(worst_overlap, overlap_seconds(d, run.scenario.pattern));
      }
      for (const UnplacedTime& u : out.schedule.unplaced) placed[u.task_id] += u.seconds;
      for (std::size_t i = 0; i < out.tasks.size(); ++i) {
        const double owed =
            held_config(out.tasks[i], out.allocation.states[i]).resource * run.scenario.horizon;
        const double got = placed.count(out.tasks[i].id) ? placed.at(out.tasks[i].id) : 0.0;
        worst_balance = std::max(worst_balance, std::abs(got - owed));
      }
    }
  }
  const bool pass = worst_overlap == 0.0 && worst_balance <= 1e-9;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%zu runs x 4 strategies: flagged overlap %.3g s, worst time balance %.3g s",
                runs.size(), worst_overlap, worst_balance);
  report("scheduler-safety", pass, detail);
}

void criterion_strategy_ordering(const std::vector<ReferenceRun>& runs, double elapsed) {
  std::array<std::vector<double>, 4> normalized;
  int cognitive_wins = 0;
  bool in_bounds = true;
  for (const ReferenceRun& run : runs) {
    for (std::size_t si = 0; si < 4; ++si) {
      const double x = run.outcomes[si].result.normalized;
      normalized[si].push_back(x);
      if (!(x > 0.0 && x <= 1.0 + 1e-6)) in_bounds = false;
    }
    if (run.outcomes[3].result.normalized >= run.outcomes[2].result.normalized) ++cognitive_wins;
  }
  std::array<double, 4> mean{}, stddev{};
  for (std::size_t si = 0; si < 4; ++si) {
    double sum = 0.0;
    for (double x : normalized[si]) sum += x;
    mean[si] = sum / static_cast<double>(normalized[si].size());
    double sq = 0.0;
    for (double x : normalized[si]) sq += (x - mean[si]) * (x - mean[si]);
    stddev[si] = std::sqrt(sq / static_cast<double>(normalized[si].size()));
  }
  const bool ordered = mean[3] > mean[2] && mean[2] > mean[1] && mean[1] > mean[0];
  const bool smallest_std =
      stddev[3] < stddev[0] && stddev[3] < stddev[1] && stddev[3] < stddev[2];
  const int need_wins = static_cast<int>(runs.size()) - static_cast<int>(runs.size()) / 100;
  const bool pass = ordered && smallest_std && cognitive_wins >= need_wins && in_bounds &&
                    elapsed < 300.0;
  char detail[240];
  std::snprintf(detail, sizeof(detail),
                "means U/A/S/C %.3f/%.3f/%.3f/%.3f, stds %.4f/%.4f/%.4f/%.4f, C>=S %d/%zu, %.1f s",
                mean[0], mean[1], mean[2], mean[3], stddev[0], stddev[1], stddev[2], stddev[3],
                cognitive_wins, runs.size(), elapsed);
  report("strategy-ordering", pass, detail);
}

void criterion_concavity(const std::vector<ReferenceRun>& runs) {
  const ScenarioParams params;
  long lists = 0;
  bool pass = true;
  for (const ReferenceRun& run : runs) {
    for (const Task& t : run.scenario.tasks) {
      for (const JobList* list : {&t.standard_list, &t.alternative_list}) {
        if (list->empty()) continue;
        ++lists;
        for (std::size_t i = 1; i < list->size() && pass; ++i) {
          if (!((*list)[i].resource > (*list)[i - 1].resource &&
                (*list)[i].utility > (*list)[i - 1].utility))
            pass = false;
        }
        for (std::size_t i = 2; i < list->size() && pass; ++i) {
          const double prev = ((*list)[i - 1].utility - (*list)[i - 2].utility) /
                              ((*list)[i - 1].resource - (*list)[i - 2].resource);
          const double cur = ((*list)[i].utility - (*list)[i - 1].utility) /
                             ((*list)[i].resource - (*list)[i - 1].resource);
          if (!(cur <= prev + 1e-9)) pass = false;
        }
      }
    }
  }
  // utility model monotone over the full grid
  for (const TargetType& type : params.target_types) {
    for (double factor : params.revisit_factors) {
      double prev = -1.0;
      for (double dwell : params.dwell_choices) {
        const double u =
            config_utility(dwell, factor * type.revisit_scale, type, type.weight,
                           params.dwell_saturation);
        if (!(u > prev)) pass = false;
        prev = u;
      }
    }
    for (double dwell : params.dwell_choices) {
      double prev = std::numeric_limits<double>::infinity();
      for (double factor : params.revisit_factors) {
        const double u =
            config_utility(dwell, factor * type.revisit_scale, type, type.weight,
                           params.dwell_saturation);
        if (!(u < prev)) pass = false;
        prev = u;
      }
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail), "%ld generated job lists checked, grid monotone", lists);
  report("concavity-monotone", pass, detail);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void criterion_determinism() {
  ExperimentConfig config;  // reference scenario, 100 runs
  const auto base = std::filesystem::temp_directory_path() / "radarrm_acceptance";
  std::filesystem::remove_all(base);
  const auto dir_a = base / "a";
  const auto dir_b = base / "b";
  std::ostringstream log_a, log_b;
  cmd_montecarlo(config, dir_a, 2, log_a);
  cmd_montecarlo(config, dir_b, 4, log_b);
  const bool runs_equal = slurp(dir_a / "runs.csv") == slurp(dir_b / "runs.csv");
  const bool summary_equal = slurp(dir_a / "summary.csv") == slurp(dir_b / "summary.csv");
  const bool pass = runs_equal && summary_equal && !slurp(dir_a / "runs.csv").empty();
  std::filesystem::remove_all(base);
  char detail[120];
  std::snprintf(detail, sizeof(detail), "runs.csv %s, summary.csv %s",
                runs_equal ? "identical" : "DIFFER", summary_equal ? "identical" : "DIFFER");
  report("determinism", pass, detail);
}

}  // namespace

int main() {
  criterion_example_exact();
  criterion_budget_partition();
  criterion_oracle_dominance();

  const auto t0 = Clock::now();
  const std::vector<ReferenceRun> runs = reference_sweep(100, 1);
  const double sweep_elapsed = seconds_since(t0);
  criterion_scheduler_safety(runs);
  criterion_strategy_ordering(runs, sweep_elapsed);
  criterion_concavity(runs);

  criterion_determinism();

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
