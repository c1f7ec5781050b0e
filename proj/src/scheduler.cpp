#include "radarrm/scheduler.hpp"

#include <algorithm>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>

#include "json.hpp"

namespace radarrm {

namespace {

struct Hole {
  double start = 0.0;
  double end = 0.0;
};

// Earliest hole that fits `len`; consumes from the hole's front.
std::optional<double> take_first_fit(std::vector<Hole>& holes, double len) {
  for (auto it = holes.begin(); it != holes.end(); ++it) {
    if (it->end - it->start + 1e-12 >= len) {
      const double at = it->start;
      it->start += len;
      if (it->end - it->start < 1e-12) holes.erase(it);
      return at;
    }
  }
  return std::nullopt;
}

std::vector<Hole> interference_free_holes(const InterferencePattern& pattern) {
  std::vector<Hole> holes;
  double t = 0.0;
  for (const Interval& iv : pattern.active_intervals) {
    if (iv.start - t > 1e-12) holes.push_back({t, iv.start});
    t = iv.end;
  }
  if (pattern.horizon - t > 1e-12) holes.push_back({t, pattern.horizon});
  return holes;
}

const char* class_name(DwellClass c) {
  switch (c) {
    case DwellClass::NonProne: return "non_prone";
    case DwellClass::StandardFlagged: return "standard_flagged";
    case DwellClass::Alternative: return "alternative";
    case DwellClass::StandardUnaware: return "standard_unaware";
  }
  return "unknown";
}

}  // namespace

DwellClass classify_dwells(const Task& task, const AllocationState& state) {
  if (!task.prone) return DwellClass::NonProne;
  if (state.held_list == ListKind::Alternative) return DwellClass::Alternative;
  if (state.flag_non_interfered) return DwellClass::StandardFlagged;
  // Switched to the alternative list but still holding a standard job whose
  // draws sit in R_ni: the interference-free placement was already paid for.
  if (state.active_list == ListKind::Alternative && state.held_index > 0)
    return DwellClass::StandardFlagged;
  return DwellClass::StandardUnaware;
}

Schedule build_schedule(const AllocationResult& result, std::span<const Task> tasks,
                        const InterferencePattern& pattern, const ScheduleOptions& options) {
  if (!(options.chunk > 0.0)) throw std::invalid_argument("chunk must be positive");
  if (result.states.size() != tasks.size())
    throw std::invalid_argument("allocation states do not match the task span");

  Schedule schedule;
  schedule.horizon = pattern.horizon;
  schedule.active_intervals = pattern.active_intervals;

  std::vector<Hole> free_holes, active_holes, any_holes;
  if (options.use_interference_knowledge) {
    free_holes = interference_free_holes(pattern);
    for (const Interval& iv : pattern.active_intervals) active_holes.push_back({iv.start, iv.end});
  } else {
    any_holes.push_back({0.0, pattern.horizon});
  }

  struct Item {
    int group;  // flagged tasks claim interference-free gaps first
    int task_id;
    std::size_t index;
    DwellClass cls;
    double owed;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const AllocationState& s = result.states[i];
    const double owed = held_config(tasks[i], s).resource * pattern.horizon;
    if (owed <= 1e-12) continue;
    const DwellClass cls = classify_dwells(tasks[i], s);
    items.push_back({cls == DwellClass::StandardFlagged ? 0 : 1, tasks[i].id, i, cls, owed});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.group != b.group) return a.group < b.group;
    return a.task_id < b.task_id;
  });

  if (options.use_interference_knowledge && !free_holes.empty()) {
    double min_free = std::numeric_limits<double>::infinity();
    for (const Hole& h : free_holes) min_free = std::min(min_free, h.end - h.start);
    const bool any_flagged = std::any_of(items.begin(), items.end(), [](const Item& it) {
      return it.cls == DwellClass::StandardFlagged;
    });
    if (any_flagged && options.chunk > min_free + 1e-12)
      std::cerr << "warning: chunk " << options.chunk
                << " s exceeds the shortest interference-free segment; flagged time may go unplaced\n";
  }

  if (options.use_interference_knowledge) {
    for (const Item& item : items) {
      double remaining = item.owed;
      while (remaining > 1e-12) {
        const double len = std::min(options.chunk, remaining);
        std::optional<double> at;
        if (item.cls == DwellClass::StandardFlagged) {
          at = take_first_fit(free_holes, len);
        } else {
          at = take_first_fit(active_holes, len);
          if (!at) at = take_first_fit(free_holes, len);
        }
        if (!at) break;
        schedule.dwells.push_back({item.task_id, *at, len, item.cls});
        remaining -= len;
      }
      if (remaining > 1e-12) schedule.unplaced.push_back({item.task_id, remaining});
    }
    return schedule;
  }

  // Without interference knowledge tasks are interleaved round-robin, one
  // chunk per owing task per pass, the way a fair dwell scheduler braids
  // recurring dwells across the horizon.
  std::vector<double> remaining(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) remaining[i] = items[i].owed;
  bool placed_any = true;
  while (placed_any) {
    placed_any = false;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (remaining[i] <= 1e-12) continue;
      const double len = std::min(options.chunk, remaining[i]);
      const auto at = take_first_fit(any_holes, len);
      if (!at) continue;
      schedule.dwells.push_back({items[i].task_id, *at, len, items[i].cls});
      remaining[i] -= len;
      placed_any = true;
    }
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (remaining[i] > 1e-12) schedule.unplaced.push_back({items[i].task_id, remaining[i]});
  }
  return schedule;
}

double overlap_seconds(const Dwell& dwell, const InterferencePattern& pattern) {
  double overlap = 0.0;
  for (const Interval& iv : pattern.active_intervals) {
    const double lo = std::max(dwell.start, iv.start);
    const double hi = std::min(dwell.end(), iv.end);
    if (hi > lo) overlap += hi - lo;
  }
  return overlap;
}

std::vector<bool> overlap_report(const Schedule& schedule, const InterferencePattern& pattern) {
  std::vector<bool> interfered;
  interfered.reserve(schedule.dwells.size());
  for (const Dwell& d : schedule.dwells) interfered.push_back(overlap_seconds(d, pattern) > 1e-12);
  return interfered;
}

std::string schedule_to_json(const Schedule& schedule) {
  nlohmann::ordered_json j;
  j["horizon"] = schedule.horizon;
  auto& active = j["active"] = nlohmann::ordered_json::array();
  for (const Interval& iv : schedule.active_intervals) active.push_back({iv.start, iv.end});
  auto& dwells = j["dwells"] = nlohmann::ordered_json::array();
  for (const Dwell& d : schedule.dwells) {
    dwells.push_back({{"task", d.task_id},
                      {"start", d.start},
                      {"duration", d.duration},
                      {"class", class_name(d.dwell_class)}});
  }
  auto& unplaced = j["unplaced"] = nlohmann::ordered_json::array();
  for (const UnplacedTime& u : schedule.unplaced)
    unplaced.push_back({{"task", u.task_id}, {"seconds", u.seconds}});
  return j.dump(2);
}

}  // namespace radarrm
