#pragma once

#include <optional>
#include <span>
#include <vector>

#include "radarrm/model.hpp"

namespace radarrm {

/// One committed upgrade: which task moved from where to where, and the
/// utility/resource deltas measured between the two configurations.
struct UpgradeRecord {
  int task_id = 0;
  ListKind from_list = ListKind::Standard;
  int from_index = 0;
  ListKind to_list = ListKind::Standard;
  int to_index = 0;
  double delta_utility = 0.0;
  double delta_resource = 0.0;
};

struct AllocationResult {
  std::vector<AllocationState> states;  // parallel to the task span
  double total_utility = 0.0;
  ResourceBudget initial;
  ResourceBudget remaining;
  std::vector<UpgradeRecord> upgrade_log;
};

/// The job a task would upgrade to next, with its utility-to-resource score.
struct UpgradeCandidate {
  int task_index = 0;  // position in the task span
  ListKind list = ListKind::Standard;
  int job_index = 0;
  double delta_utility = 0.0;
  double delta_resource = 0.0;
  double ratio = 0.0;
};

/// Classical greedy allocation: standard lists only, one scalar time budget,
/// interference exposure ignored. Repeatedly upgrades the task with the best
/// utility-to-resource ratio while its next job still fits.
AllocationResult classic_allocate(std::span<const Task> tasks, double budget);

/// Interference-aware greedy allocation against the split budget (R_i, R_ni).
///
/// Selection is by best utility-to-resource ratio over each task's active
/// list (ties to the smaller task id). Charging uses full-refund semantics:
/// the task's current draws are returned before the full requirement r of the
/// new configuration is charged.
///   - non-prone tasks, and prone tasks already on their alternative list,
///     charge R_i first and overflow into R_ni; if r exceeds the combined
///     remainder the task is skipped for the rest of the run (the combined
///     remainder only ever shrinks);
///   - a prone task on its standard list needs the full r inside R_ni; when
///     that succeeds it is flagged non-interfered, otherwise the task is
///     switched to its alternative list and another candidate is selected.
///     A switched task keeps its current configuration until an alternative
///     job strictly improving its utility is charged.
AllocationResult allocate_interference_aware(std::span<const Task> tasks, ResourceBudget budget);

/// Exhaustive optimum over all per-task (list, index) choices. Feasibility:
/// prone tasks on standard non-base configurations must fit entirely inside
/// R_ni; everything else draws R_i first with overflow into R_ni. Refuses
/// instances with more than kOracleCombosLimit combinations.
AllocationResult oracle_allocate(std::span<const Task> tasks, ResourceBudget budget);

inline constexpr double kOracleCombosLimit = 1e6;

/// Highest-ratio upgrade candidate over the active lists, ties to the
/// smaller task id; nullopt when every list is exhausted.
std::optional<UpgradeCandidate> select_next_upgrade(std::span<const Task> tasks,
                                                    std::span<const AllocationState> states);

}  // namespace radarrm
