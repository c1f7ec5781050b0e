#include "radarrm/optimizer.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace radarrm {

namespace {

double clamp_zero(double x) { return std::abs(x) < kResourceEps ? 0.0 : x; }

std::optional<UpgradeCandidate> next_candidate(const Task& task, const AllocationState& state,
                                               int task_index) {
  const Configuration& held = held_config(task, state);
  const JobList& active = list_of(task, state.active_list);
  int next = -1;
  if (state.active_list == state.held_list) {
    next = state.held_index + 1;
    if (next >= static_cast<int>(active.size())) return std::nullopt;
  } else {
    // Switched to the alternative list while still holding a standard job:
    // the candidate is the cheapest alternative strictly improving utility.
    for (int m = 1; m < static_cast<int>(active.size()); ++m) {
      if (active[m].utility > held.utility) {
        next = m;
        break;
      }
    }
    if (next < 0) return std::nullopt;
  }
  const Configuration& target = active[static_cast<std::size_t>(next)];
  const double du = target.utility - held.utility;
  const double dr = target.resource - held.resource;
  if (!(dr > 0.0) || !(du > 0.0)) return std::nullopt;
  return UpgradeCandidate{task_index, state.active_list, next, du, dr, du / dr};
}

std::optional<UpgradeCandidate> select_best(std::span<const Task> tasks,
                                            std::span<const AllocationState> states,
                                            const std::vector<char>* skipped) {
  std::optional<UpgradeCandidate> best;
  int best_id = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (skipped && (*skipped)[i]) continue;
    auto cand = next_candidate(tasks[i], states[i], static_cast<int>(i));
    if (!cand) continue;
    const int id = tasks[i].id;
    if (!best || cand->ratio > best->ratio || (cand->ratio == best->ratio && id < best_id)) {
      best = cand;
      best_id = id;
    }
  }
  return best;
}

void log_upgrade(AllocationResult& result, const Task& task, const AllocationState& before,
                 const UpgradeCandidate& cand) {
  result.upgrade_log.push_back(UpgradeRecord{task.id, before.held_list, before.held_index,
                                             cand.list, cand.job_index, cand.delta_utility,
                                             cand.delta_resource});
}

double sum_held_utility(std::span<const Task> tasks, std::span<const AllocationState> states) {
  double total = 0.0;
  for (std::size_t i = 0; i < tasks.size(); ++i) total += held_config(tasks[i], states[i]).utility;
  return total;
}

AllocationResult run_greedy(std::span<const Task> tasks, ResourceBudget budget,
                            bool interference_aware) {
  if (budget.r_i < -kResourceEps || budget.r_ni < -kResourceEps)
    throw std::invalid_argument("budget components must be non-negative");
  budget.r_i = std::max(budget.r_i, 0.0);
  budget.r_ni = std::max(budget.r_ni, 0.0);

  AllocationResult result;
  result.initial = budget;
  result.states.assign(tasks.size(), AllocationState{});
  std::vector<char> skipped(tasks.size(), 0);

  while (auto cand = select_best(tasks, result.states, &skipped)) {
    AllocationState& s = result.states[static_cast<std::size_t>(cand->task_index)];
    const Task& task = tasks[static_cast<std::size_t>(cand->task_index)];
    const Configuration& target = list_of(task, cand->list)[static_cast<std::size_t>(cand->job_index)];
    const double r = target.resource;

    if (interference_aware && task.prone && s.active_list == ListKind::Standard) {
      // Standard upgrade of a prone task: the full requirement must fit the
      // interference-free budget (the task's own draws sit there already).
      const double avail_ni = budget.r_ni + s.draw_ni;
      if (avail_ni + kResourceEps >= r) {
        budget.r_ni = clamp_zero(avail_ni - r);
        log_upgrade(result, task, s, *cand);
        s.held_list = ListKind::Standard;
        s.held_index = cand->job_index;
        s.draw_i = 0.0;
        s.draw_ni = r;
        s.flag_non_interfered = true;
      } else {
        // Not enough interference-free time: continue on the alternative
        // list and reselect. The held configuration stays as it is.
        s.active_list = ListKind::Alternative;
        s.flag_non_interfered = false;
      }
      continue;
    }

    // Non-prone task, or prone task upgrading on its alternative list:
    // refund, then charge R_i first and overflow into R_ni.
    const double avail_i = budget.r_i + s.draw_i;
    const double avail_ni = budget.r_ni + s.draw_ni;
    if (avail_i + avail_ni + kResourceEps >= r) {
      const double take_i = std::min(r, avail_i);
      budget.r_i = clamp_zero(avail_i - take_i);
      budget.r_ni = clamp_zero(avail_ni - (r - take_i));
      log_upgrade(result, task, s, *cand);
      s.held_list = cand->list;
      s.held_index = cand->job_index;
      s.draw_i = take_i;
      s.draw_ni = r - take_i;
      s.flag_non_interfered = false;  // remove the flag if it exists
    } else {
      // The combined remainder only shrinks, so this task can never fit.
      skipped[static_cast<std::size_t>(cand->task_index)] = 1;
    }
  }

  result.remaining = budget;
  result.total_utility = sum_held_utility(tasks, result.states);
  return result;
}

}  // namespace

AllocationResult classic_allocate(std::span<const Task> tasks, double budget) {
  return run_greedy(tasks, ResourceBudget{budget, 0.0}, /*interference_aware=*/false);
}

AllocationResult allocate_interference_aware(std::span<const Task> tasks, ResourceBudget budget) {
  return run_greedy(tasks, budget, /*interference_aware=*/true);
}

std::optional<UpgradeCandidate> select_next_upgrade(std::span<const Task> tasks,
                                                    std::span<const AllocationState> states) {
  return select_best(tasks, states, nullptr);
}

AllocationResult oracle_allocate(std::span<const Task> tasks, ResourceBudget budget) {
  if (budget.r_i < -kResourceEps || budget.r_ni < -kResourceEps)
    throw std::invalid_argument("budget components must be non-negative");
  budget.r_i = std::max(budget.r_i, 0.0);
  budget.r_ni = std::max(budget.r_ni, 0.0);

  struct Option {
    ListKind list;
    int index;
    double resource;
    double utility;
    bool needs_ni;  // prone standard non-base: must fit entirely in R_ni
  };

  const std::size_t n = tasks.size();
  std::vector<std::vector<Option>> options(n);
  double combos = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Task& t = tasks[i];
    for (int k = 0; k < static_cast<int>(t.standard_list.size()); ++k) {
      const Configuration& c = t.standard_list[static_cast<std::size_t>(k)];
      options[i].push_back({ListKind::Standard, k, c.resource, c.utility, t.prone && k > 0});
    }
    if (t.prone) {
      for (int k = 1; k < static_cast<int>(t.alternative_list.size()); ++k) {
        const Configuration& c = t.alternative_list[static_cast<std::size_t>(k)];
        options[i].push_back({ListKind::Alternative, k, c.resource, c.utility, false});
      }
    }
    combos *= static_cast<double>(options[i].size());
    if (combos > kOracleCombosLimit)
      throw std::invalid_argument("oracle instance exceeds the combination limit");
  }

  const double total_cap = budget.total() + kResourceEps;
  const double ni_cap = budget.r_ni + kResourceEps;

  std::vector<int> choice(n, 0), best_choice(n, 0);
  double best_utility = -1.0;

  auto dfs = [&](auto&& self, std::size_t i, double sum_r, double sum_ni_r, double sum_u) -> void {
    if (sum_r > total_cap || sum_ni_r > ni_cap) return;
    if (i == n) {
      if (sum_u > best_utility) {
        best_utility = sum_u;
        best_choice = choice;
      }
      return;
    }
    for (std::size_t o = 0; o < options[i].size(); ++o) {
      const Option& opt = options[i][o];
      choice[i] = static_cast<int>(o);
      self(self, i + 1, sum_r + opt.resource, sum_ni_r + (opt.needs_ni ? opt.resource : 0.0),
           sum_u + opt.utility);
    }
  };
  dfs(dfs, 0, 0.0, 0.0, 0.0);

  AllocationResult result;
  result.initial = budget;
  result.states.assign(n, AllocationState{});

  // First satisfy the flagged draws out of R_ni, then fill everything else
  // R_i-first; feasibility of the chosen assignment guarantees both pools.
  double pool_i = budget.r_i;
  double pool_ni = budget.r_ni;
  for (std::size_t i = 0; i < n; ++i) {
    const Option& opt = options[i][static_cast<std::size_t>(best_choice[i])];
    AllocationState& s = result.states[i];
    s.active_list = s.held_list = opt.list;
    s.held_index = opt.index;
    if (opt.needs_ni) {
      s.flag_non_interfered = true;
      s.draw_ni = opt.resource;
      pool_ni -= opt.resource;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Option& opt = options[i][static_cast<std::size_t>(best_choice[i])];
    if (opt.needs_ni || opt.resource <= 0.0) continue;
    AllocationState& s = result.states[i];
    const double take_i = std::min(opt.resource, std::max(pool_i, 0.0));
    s.draw_i = take_i;
    s.draw_ni = opt.resource - take_i;
    pool_i -= take_i;
    pool_ni -= s.draw_ni;
  }
  result.remaining = ResourceBudget{clamp_zero(std::max(pool_i, 0.0)),
                                    clamp_zero(std::max(pool_ni, 0.0))};
  result.total_utility = sum_held_utility(tasks, result.states);
  return result;
}

}  // namespace radarrm
