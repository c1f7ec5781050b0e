#pragma once

#include <cstddef>
#include <vector>

namespace radarrm {

// Absolute tolerance for resource arithmetic; budget components whose
// magnitude falls below this are clamped to exactly zero.
inline constexpr double kResourceEps = 1e-9;

/// One operational-parameter choice for a task. `resource` is the time
/// fraction dwell/revisit; `utility` comes from the scenario quality model.
struct Configuration {
  int id = 0;
  double dwell_time = 0.0;        // seconds; 0 only for the base entry
  double revisit_interval = 0.0;  // seconds; 0 only for the base entry
  double resource = 0.0;          // time fraction in [0, 1]
  double utility = 0.0;           // >= 0
};

/// The no-execution placeholder every job list starts with.
Configuration base_configuration();

/// Per-task menu of configurations: base first, then strictly increasing in
/// both resource and utility (concave after majorant trimming).
struct JobList {
  std::vector<Configuration> jobs;

  std::size_t size() const { return jobs.size(); }
  bool empty() const { return jobs.empty(); }
  const Configuration& operator[](std::size_t i) const { return jobs[i]; }
};

enum class ListKind { Standard, Alternative };

struct Task {
  int id = 0;
  bool prone = false;  // exposed to the interferer by beam direction / frequency
  JobList standard_list;
  JobList alternative_list;  // mirrors standard_list with utility x d_alt; prone only
  double weight = 1.0;       // target-importance multiplier already folded into utilities
  double d_std = 0.0;        // realized-utility factor for an interfered standard config
  double d_alt = 0.0;        // utility factor defining the alternative configs
};

/// Mirror `standard` index-for-index: identical resource, utility scaled by
/// `factor` (> 0).
JobList make_alternative_list(const JobList& standard, double factor);

/// Remaining virtual time budgets: interference-possible and interference-free.
struct ResourceBudget {
  double r_i = 0.0;
  double r_ni = 0.0;

  double total() const { return r_i + r_ni; }
};

/// Per-task bookkeeping during and after an allocation run.
///
/// `held_list`/`held_index` identify the configuration the task owns right
/// now; `active_list` is where future upgrade candidates come from. The two
/// differ only for a prone task that was switched to its alternative list
/// while still holding a standard configuration paid from R_ni.
struct AllocationState {
  ListKind active_list = ListKind::Standard;
  ListKind held_list = ListKind::Standard;
  int held_index = 0;  // 0 = base configuration
  bool flag_non_interfered = false;
  double draw_i = 0.0;
  double draw_ni = 0.0;

  double draw_total() const { return draw_i + draw_ni; }
};

const JobList& list_of(const Task& task, ListKind kind);
const Configuration& held_config(const Task& task, const AllocationState& state);

/// Half-open [start, end) stretch of the timeline.
struct Interval {
  double start = 0.0;
  double end = 0.0;

  double length() const { return end - start; }
};

/// Known on/off behaviour of the interferer over one planning horizon.
struct InterferencePattern {
  double horizon = 1.0;                    // seconds
  std::vector<Interval> active_intervals;  // disjoint, sorted, within [0, horizon]
};

/// Fraction of the horizon covered by active intervals.
double duty(const InterferencePattern& pattern);

/// Split the unit time resource by the interferer duty:
/// r_i = duty (interference possible), r_ni = 1 - duty (interference free).
ResourceBudget partition_budget(const InterferencePattern& pattern);

// Validators; throw std::invalid_argument naming the violated condition.
void validate(const Configuration& config);
void validate(const JobList& list);
void validate(const Task& task);
void validate(const InterferencePattern& pattern);

}  // namespace radarrm
