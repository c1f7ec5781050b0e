#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radarrm/joblist.hpp"
#include "radarrm/model.hpp"
#include "radarrm/optimizer.hpp"
#include "radarrm/scenario.hpp"
#include "radarrm/scheduler.hpp"

namespace py = pybind11;
using namespace radarrm;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Q-RAM style radar resource management with interference-aware allocation";

  py::enum_<ListKind>(m, "ListKind")
      .value("Standard", ListKind::Standard)
      .value("Alternative", ListKind::Alternative);

  py::class_<Configuration>(m, "Configuration")
      .def(py::init<>())
      .def_readwrite("id", &Configuration::id)
      .def_readwrite("dwell_time", &Configuration::dwell_time)
      .def_readwrite("revisit_interval", &Configuration::revisit_interval)
      .def_readwrite("resource", &Configuration::resource)
      .def_readwrite("utility", &Configuration::utility)
      .def("__repr__", [](const Configuration& c) {
        return "Configuration(r=" + std::to_string(c.resource) +
               ", u=" + std::to_string(c.utility) + ")";
      });

  py::class_<JobList>(m, "JobList")
      .def(py::init<>())
      .def_readwrite("jobs", &JobList::jobs)
      .def("__len__", &JobList::size)
      .def("__getitem__",
           [](const JobList& l, std::size_t i) {
             if (i >= l.size()) throw py::index_error();
             return l[i];
           });

  py::class_<Task>(m, "Task")
      .def(py::init<>())
      .def_readwrite("id", &Task::id)
      .def_readwrite("prone", &Task::prone)
      .def_readwrite("standard_list", &Task::standard_list)
      .def_readwrite("alternative_list", &Task::alternative_list)
      .def_readwrite("weight", &Task::weight)
      .def_readwrite("d_std", &Task::d_std)
      .def_readwrite("d_alt", &Task::d_alt);

  py::class_<ResourceBudget>(m, "ResourceBudget")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("r_i"), py::arg("r_ni"))
      .def_readwrite("r_i", &ResourceBudget::r_i)
      .def_readwrite("r_ni", &ResourceBudget::r_ni)
      .def("total", &ResourceBudget::total)
      .def("__repr__", [](const ResourceBudget& b) {
        return "ResourceBudget(r_i=" + std::to_string(b.r_i) +
               ", r_ni=" + std::to_string(b.r_ni) + ")";
      });

  py::class_<AllocationState>(m, "AllocationState")
      .def(py::init<>())
      .def_readwrite("active_list", &AllocationState::active_list)
      .def_readwrite("held_list", &AllocationState::held_list)
      .def_readwrite("held_index", &AllocationState::held_index)
      .def_readwrite("flag_non_interfered", &AllocationState::flag_non_interfered)
      .def_readwrite("draw_i", &AllocationState::draw_i)
      .def_readwrite("draw_ni", &AllocationState::draw_ni);

  py::class_<Interval>(m, "Interval")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("start"), py::arg("end"))
      .def_readwrite("start", &Interval::start)
      .def_readwrite("end", &Interval::end)
      .def("length", &Interval::length);

  py::class_<InterferencePattern>(m, "InterferencePattern")
      .def(py::init<>())
      .def_readwrite("horizon", &InterferencePattern::horizon)
      .def_readwrite("active_intervals", &InterferencePattern::active_intervals);

  m.def("base_configuration", &base_configuration);
  m.def("make_alternative_list", &make_alternative_list, py::arg("standard"), py::arg("factor"));
  m.def("duty", &duty, py::arg("pattern"));
  m.def("partition_budget", &partition_budget, py::arg("pattern"));
  m.def("validate_task", [](const Task& t) { validate(t); });
  m.def("validate_pattern", [](const InterferencePattern& p) { validate(p); });

  py::class_<ConfigGrid>(m, "ConfigGrid")
      .def(py::init<>())
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("dwell_choices"),
           py::arg("revisit_choices"))
      .def_readwrite("dwell_choices", &ConfigGrid::dwell_choices)
      .def_readwrite("revisit_choices", &ConfigGrid::revisit_choices);

  m.def("enumerate_configs", &enumerate_configs, py::arg("grid"), py::arg("utility"));
  m.def("concave_majorant", &concave_majorant, py::arg("configs"));

  py::class_<UpgradeRecord>(m, "UpgradeRecord")
      .def_readonly("task_id", &UpgradeRecord::task_id)
      .def_readonly("from_list", &UpgradeRecord::from_list)
      .def_readonly("from_index", &UpgradeRecord::from_index)
      .def_readonly("to_list", &UpgradeRecord::to_list)
      .def_readonly("to_index", &UpgradeRecord::to_index)
      .def_readonly("delta_utility", &UpgradeRecord::delta_utility)
      .def_readonly("delta_resource", &UpgradeRecord::delta_resource);

  py::class_<AllocationResult>(m, "AllocationResult")
      .def_readonly("states", &AllocationResult::states)
      .def_readonly("total_utility", &AllocationResult::total_utility)
      .def_readonly("initial", &AllocationResult::initial)
      .def_readonly("remaining", &AllocationResult::remaining)
      .def_readonly("upgrade_log", &AllocationResult::upgrade_log);

  m.def(
      "classic_allocate",
      [](const std::vector<Task>& tasks, double budget) { return classic_allocate(tasks, budget); },
      py::arg("tasks"), py::arg("budget"));
  m.def(
      "allocate_interference_aware",
      [](const std::vector<Task>& tasks, const ResourceBudget& budget) {
        return allocate_interference_aware(tasks, budget);
      },
      py::arg("tasks"), py::arg("budget"));
  m.def(
      "oracle_allocate",
      [](const std::vector<Task>& tasks, const ResourceBudget& budget) {
        return oracle_allocate(tasks, budget);
      },
      py::arg("tasks"), py::arg("budget"));

  py::enum_<DwellClass>(m, "DwellClass")
      .value("NonProne", DwellClass::NonProne)
      .value("StandardFlagged", DwellClass::StandardFlagged)
      .value("Alternative", DwellClass::Alternative)
      .value("StandardUnaware", DwellClass::StandardUnaware);

  py::class_<Dwell>(m, "Dwell")
      .def_readonly("task_id", &Dwell::task_id)
      .def_readonly("start", &Dwell::start)
      .def_readonly("duration", &Dwell::duration)
      .def_readonly("dwell_class", &Dwell::dwell_class)
      .def("end", &Dwell::end);

  py::class_<UnplacedTime>(m, "UnplacedTime")
      .def_readonly("task_id", &UnplacedTime::task_id)
      .def_readonly("seconds", &UnplacedTime::seconds);

  py::class_<Schedule>(m, "Schedule")
      .def_readonly("horizon", &Schedule::horizon)
      .def_readonly("active_intervals", &Schedule::active_intervals)
      .def_readonly("dwells", &Schedule::dwells)
      .def_readonly("unplaced", &Schedule::unplaced);

  py::class_<ScheduleOptions>(m, "ScheduleOptions")
      .def(py::init<>())
      .def(py::init<double, bool>(), py::arg("chunk"), py::arg("use_interference_knowledge"))
      .def_readwrite("chunk", &ScheduleOptions::chunk)
      .def_readwrite("use_interference_knowledge", &ScheduleOptions::use_interference_knowledge);

  m.def(
      "build_schedule",
      [](const AllocationResult& result, const std::vector<Task>& tasks,
         const InterferencePattern& pattern, const ScheduleOptions& options) {
        return build_schedule(result, tasks, pattern, options);
      },
      py::arg("result"), py::arg("tasks"), py::arg("pattern"),
      py::arg("options") = ScheduleOptions{});
  m.def("overlap_seconds", &overlap_seconds, py::arg("dwell"), py::arg("pattern"));
  m.def("overlap_report", &overlap_report, py::arg("schedule"), py::arg("pattern"));
  m.def("schedule_to_json", &schedule_to_json, py::arg("schedule"));

  py::class_<TargetType>(m, "TargetType")
      .def(py::init<>())
      .def(py::init<std::string, double, double>(), py::arg("name"), py::arg("revisit_scale"),
           py::arg("weight"))
      .def_readwrite("name", &TargetType::name)
      .def_readwrite("revisit_scale", &TargetType::revisit_scale)
      .def_readwrite("weight", &TargetType::weight);

  py::class_<TargetInstance>(m, "TargetInstance")
      .def_readonly("azimuth_deg", &TargetInstance::azimuth_deg)
      .def_readonly("range_m", &TargetInstance::range_m)
      .def_readonly("speed_mps", &TargetInstance::speed_mps)
      .def_readonly("type", &TargetInstance::type);

  py::class_<ScenarioParams>(m, "ScenarioParams")
      .def(py::init<>())
      .def_readwrite("target_count", &ScenarioParams::target_count)
      .def_readwrite("sector_lo_deg", &ScenarioParams::sector_lo_deg)
      .def_readwrite("sector_hi_deg", &ScenarioParams::sector_hi_deg)
      .def_readwrite("duty", &ScenarioParams::duty)
      .def_readwrite("min_segment", &ScenarioParams::min_segment)
      .def_readwrite("max_segment", &ScenarioParams::max_segment)
      .def_readwrite("horizon", &ScenarioParams::horizon)
      .def_readwrite("chunk", &ScenarioParams::chunk)
      .def_readwrite("dwell_choices", &ScenarioParams::dwell_choices)
      .def_readwrite("revisit_factors", &ScenarioParams::revisit_factors)
      .def_readwrite("target_types", &ScenarioParams::target_types)
      .def_readwrite("dwell_saturation", &ScenarioParams::dwell_saturation)
      .def_readwrite("d_std_lo", &ScenarioParams::d_std_lo)
      .def_readwrite("d_std_hi", &ScenarioParams::d_std_hi)
      .def_readwrite("d_alt_lo", &ScenarioParams::d_alt_lo)
      .def_readwrite("d_alt_hi", &ScenarioParams::d_alt_hi);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("seed", &Scenario::seed)
      .def_readonly("sector_lo_deg", &Scenario::sector_lo_deg)
      .def_readonly("sector_hi_deg", &Scenario::sector_hi_deg)
      .def_readonly("targets", &Scenario::targets)
      .def_readonly("pattern", &Scenario::pattern)
      .def_readonly("tasks", &Scenario::tasks)
      .def_readonly("horizon", &Scenario::horizon)
      .def_readonly("chunk", &Scenario::chunk);

  py::enum_<StrategyKind>(m, "StrategyKind")
      .value("UnawareNoMitigation", StrategyKind::UnawareNoMitigation)
      .value("AwareNoMitigation", StrategyKind::AwareNoMitigation)
      .value("StandardMitigation", StrategyKind::StandardMitigation)
      .value("CognitiveMitigation", StrategyKind::CognitiveMitigation);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("strategy", &RunResult::strategy)
      .def_readonly("allocated_utility", &RunResult::allocated_utility)
      .def_readonly("realized_utility", &RunResult::realized_utility)
      .def_readonly("baseline_utility", &RunResult::baseline_utility)
      .def_readonly("normalized", &RunResult::normalized);

  py::class_<StrategyOutcome>(m, "StrategyOutcome")
      .def_readonly("result", &StrategyOutcome::result)
      .def_readonly("allocation", &StrategyOutcome::allocation)
      .def_readonly("schedule", &StrategyOutcome::schedule)
      .def_readonly("tasks", &StrategyOutcome::tasks);

  py::class_<MonteCarloRecord>(m, "MonteCarloRecord")
      .def_readonly("run", &MonteCarloRecord::run)
      .def_readonly("strategy", &MonteCarloRecord::strategy)
      .def_readonly("allocated", &MonteCarloRecord::allocated)
      .def_readonly("realized", &MonteCarloRecord::realized)
      .def_readonly("baseline", &MonteCarloRecord::baseline)
      .def_readonly("normalized", &MonteCarloRecord::normalized);

  py::class_<StrategyStats>(m, "StrategyStats")
      .def_readonly("strategy", &StrategyStats::strategy)
      .def_readonly("mean", &StrategyStats::mean)
      .def_readonly("stddev", &StrategyStats::stddev)
      .def_readonly("min", &StrategyStats::min)
      .def_readonly("max", &StrategyStats::max);

  py::class_<MonteCarloResult>(m, "MonteCarloResult")
      .def_readonly("records", &MonteCarloResult::records)
      .def_readonly("stats", &MonteCarloResult::stats);

  m.def("strategy_name", [](StrategyKind k) { return std::string(strategy_name(k)); });
  m.def("config_quality", &config_quality, py::arg("dwell"), py::arg("revisit"),
        py::arg("revisit_scale"), py::arg("saturation"));
  m.def("config_utility", &config_utility, py::arg("dwell"), py::arg("revisit"), py::arg("type"),
        py::arg("weight"), py::arg("saturation") = 0.002);
  m.def("generate_scenario", &generate_scenario, py::arg("seed"), py::arg("params"));
  m.def("baseline_utility", &baseline_utility, py::arg("scenario"));
  m.def("run_strategy", &run_strategy, py::arg("scenario"), py::arg("strategy"));
  m.def("run_strategy_full", &run_strategy_full, py::arg("scenario"), py::arg("strategy"));
  m.def("monte_carlo", &monte_carlo, py::arg("params"), py::arg("n_runs"), py::arg("base_seed"),
        py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("per_run_csv", &per_run_csv, py::arg("records"));
  m.def("summary_csv", &summary_csv, py::arg("result"));
  m.attr("GENERATOR_ID") = std::string(kGeneratorId);
}
