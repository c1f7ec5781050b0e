"""Smoke tests for the python bindings."""

import pytest

import radarrm as rm


def job_list(points):
    lst = rm.JobList()
    jobs = [rm.base_configuration()]
    for i, (r, u) in enumerate(points, start=1):
        c = rm.Configuration()
        c.id = i
        c.dwell_time = r
        c.revisit_interval = 1.0
        c.resource = r
        c.utility = u
        jobs.append(c)
    lst.jobs = jobs
    return lst


def reference_tasks():
    t1 = rm.Task()
    t1.id = 1
    t1.prone = True
    t1.standard_list = job_list([(0.3, 0.6)])
    t1.alternative_list = job_list([(0.3, 0.4)])
    t1.d_alt = 0.4 / 0.6
    t2 = rm.Task()
    t2.id = 2
    t2.prone = True
    t2.standard_list = job_list([(0.3, 0.9)])
    t2.alternative_list = job_list([(0.3, 0.6)])
    t2.d_alt = 0.6 / 0.9
    t3 = rm.Task()
    t3.id = 3
    t3.standard_list = job_list([(0.3, 0.8)])
    return [t1, t2, t3]


def test_partition_budget():
    pattern = rm.InterferencePattern()
    pattern.horizon = 1.0
    pattern.active_intervals = [rm.Interval(0.0, 0.6)]
    budget = rm.partition_budget(pattern)
    assert budget.r_i == pytest.approx(0.6, abs=1e-12)
    assert budget.r_ni == pytest.approx(0.4, abs=1e-12)
    assert rm.duty(pattern) == pytest.approx(0.6, abs=1e-12)


def test_reference_allocation():
    tasks = reference_tasks()
    result = rm.allocate_interference_aware(tasks, rm.ResourceBudget(0.6, 0.4))
    assert result.total_utility == pytest.approx(2.1, abs=1e-12)
    assert result.remaining.r_i == 0.0
    assert result.remaining.r_ni == pytest.approx(0.1, abs=1e-12)
    assert result.states[1].flag_non_interfered
    assert result.states[0].active_list == rm.ListKind.Alternative
    best = rm.oracle_allocate(tasks, rm.ResourceBudget(0.6, 0.4))
    assert best.total_utility == pytest.approx(2.1, abs=1e-12)


def test_concave_majorant():
    grid = rm.ConfigGrid([0.001, 0.002, 0.004], [0.1, 0.2])
    configs = rm.enumerate_configs(grid, lambda dwell, revisit: 10.0 * dwell / (1.0 + revisit))
    lst = rm.concave_majorant(configs)
    assert len(lst) >= 2
    assert lst[0].resource == 0.0
    for a, b in zip(lst.jobs, lst.jobs[1:]):
        assert b.resource > a.resource
        assert b.utility > a.utility


def test_scenario_and_schedule():
    params = rm.ScenarioParams()
    params.target_count = 25
    scenario = rm.generate_scenario(7, params)
    assert len(scenario.tasks) == 25
    again = rm.generate_scenario(7, params)
    assert [t.prone for t in scenario.tasks] == [t.prone for t in again.tasks]

    outcome = rm.run_strategy_full(scenario, rm.StrategyKind.CognitiveMitigation)
    assert outcome.result.normalized > 0.0
    assert outcome.result.normalized <= 1.0 + 1e-6
    interfered = rm.overlap_report(outcome.schedule, scenario.pattern)
    for dwell, hit in zip(outcome.schedule.dwells, interfered):
        if dwell.dwell_class == rm.DwellClass.StandardFlagged:
            assert not hit


def test_monte_carlo_shape_and_determinism():
    params = rm.ScenarioParams()
    params.target_count = 20
    a = rm.monte_carlo(params, 3, 11, 1)
    b = rm.monte_carlo(params, 3, 11, 2)
    assert rm.per_run_csv(a.records) == rm.per_run_csv(b.records)
    assert len(a.records) == 12
    assert [s.strategy for s in a.stats] == [
        rm.StrategyKind.UnawareNoMitigation,
        rm.StrategyKind.AwareNoMitigation,
        rm.StrategyKind.StandardMitigation,
        rm.StrategyKind.CognitiveMitigation,
    ]
    for s in a.stats:
        assert 0.0 < s.min <= s.mean <= s.max <= 1.0 + 1e-6
