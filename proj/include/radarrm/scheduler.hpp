#pragma once

#include <span>
#include <string>
#include <vector>

#include "radarrm/model.hpp"
#include "radarrm/optimizer.hpp"

namespace radarrm {

enum class DwellClass { NonProne, StandardFlagged, Alternative, StandardUnaware };

struct Dwell {
  int task_id = 0;
  double start = 0.0;
  double duration = 0.0;
  DwellClass dwell_class = DwellClass::NonProne;

  double end() const { return start + duration; }
};

struct UnplacedTime {
  int task_id = 0;
  double seconds = 0.0;
};

struct Schedule {
  double horizon = 0.0;
  std::vector<Interval> active_intervals;  // interferer intervals, for rendering
  std::vector<Dwell> dwells;
  std::vector<UnplacedTime> unplaced;
};

struct ScheduleOptions {
  double chunk = 0.005;                    // seconds; atomic dwell length
  bool use_interference_knowledge = true;  // honor flags, prefer interfered time
};

/// Timeline class of a task's dwells given its allocation state.
DwellClass classify_dwells(const Task& task, const AllocationState& state);

/// Place every selected job's owed time (resource x horizon) as chunks of at
/// most `options.chunk` seconds. Flagged chunks go first-fit into
/// interference-free gaps only; other chunks fill interference-present time
/// first. Without interference knowledge everything is plain first-fit from
/// the start of the horizon. Time that fits nowhere is reported in
/// `unplaced`, never silently dropped.
Schedule build_schedule(const AllocationResult& result, std::span<const Task> tasks,
                        const InterferencePattern& pattern, const ScheduleOptions& options = {});

/// Seconds of overlap between one dwell and the active intervals.
double overlap_seconds(const Dwell& dwell, const InterferencePattern& pattern);

/// Interfered marker per dwell, parallel to schedule.dwells: true iff the
/// overlap with active intervals exceeds 1e-12 s.
std::vector<bool> overlap_report(const Schedule& schedule, const InterferencePattern& pattern);

std::string schedule_to_json(const Schedule& schedule);

}  // namespace radarrm
