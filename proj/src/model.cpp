#include "radarrm/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace radarrm {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

Configuration base_configuration() { return Configuration{}; }

JobList make_alternative_list(const JobList& standard, double factor) {
  if (!(factor > 0.0)) fail("alternative utility factor must be positive");
  JobList alt;
  alt.jobs.reserve(standard.size());
  for (const Configuration& c : standard.jobs) {
    Configuration a = c;
    a.utility = c.utility * factor;
    alt.jobs.push_back(a);
  }
  return alt;
}

const JobList& list_of(const Task& task, ListKind kind) {
  return kind == ListKind::Standard ? task.standard_list : task.alternative_list;
}

const Configuration& held_config(const Task& task, const AllocationState& state) {
  return list_of(task, state.held_list).jobs[static_cast<std::size_t>(state.held_index)];
}

double duty(const InterferencePattern& pattern) {
  double active = 0.0;
  for (const Interval& iv : pattern.active_intervals) active += iv.length();
  return pattern.horizon > 0.0 ? active / pattern.horizon : 0.0;
}

ResourceBudget partition_budget(const InterferencePattern& pattern) {
  const double d = duty(pattern);
  return ResourceBudget{d, 1.0 - d};
}

void validate(const Configuration& config) {
  if (!(config.resource >= 0.0 && config.resource <= 1.0)) fail("configuration resource outside [0, 1]");
  if (!(config.utility >= 0.0)) fail("configuration utility negative");
  if (config.dwell_time < 0.0 || config.revisit_interval < 0.0) fail("negative dwell or revisit");
  if (config.resource == 0.0 && config.utility != 0.0) fail("zero-resource configuration must have zero utility");
}

void validate(const JobList& list) {
  if (list.empty()) fail("job list empty");
  if (list.jobs.front().resource != 0.0 || list.jobs.front().utility != 0.0)
    fail("job list must start with the base configuration");
  for (const Configuration& c : list.jobs) validate(c);
  for (std::size_t i = 1; i < list.size(); ++i) {
    if (!(list[i].resource > list[i - 1].resource)) fail("job list resources not strictly increasing");
    if (!(list[i].utility > list[i - 1].utility)) fail("job list utilities not strictly increasing");
  }
}

void validate(const Task& task) {
  validate(task.standard_list);
  if (!(task.weight > 0.0)) fail("task weight must be positive");
  if (!task.prone) {
    if (!task.alternative_list.empty()) fail("non-prone task carries an alternative list");
    return;
  }
  if (task.d_std < 0.0 || task.d_std > 1.0 || task.d_alt < 0.0 || task.d_alt > 1.0)
    fail("degradation factors outside [0, 1]");
  validate(task.alternative_list);
  if (task.alternative_list.size() != task.standard_list.size())
    fail("alternative list does not mirror the standard list");
  for (std::size_t i = 0; i < task.standard_list.size(); ++i) {
    const Configuration& s = task.standard_list[i];
    const Configuration& a = task.alternative_list[i];
    if (a.resource != s.resource) fail("alternative resource differs from standard");
    if (std::abs(a.utility - task.d_alt * s.utility) > 1e-12)
      fail("alternative utility is not d_alt x standard utility");
  }
}

void validate(const InterferencePattern& pattern) {
  if (!(pattern.horizon > 0.0)) fail("pattern horizon must be positive");
  double prev_end = 0.0;
  for (const Interval& iv : pattern.active_intervals) {
    if (!(iv.start >= prev_end)) fail("active intervals overlap or are unsorted");
    if (!(iv.end > iv.start)) fail("empty or inverted active interval");
    prev_end = iv.end;
  }
  if (prev_end > pattern.horizon + 1e-12) fail("active interval extends beyond the horizon");
}

}  // namespace radarrm
