import json

import numpy as np
import pytest

from lukfre.algebra import compose, dot
from lukfre.instance import Instance
from lukfre.oracle import sample_feasible
from lukfre.solver import INFEASIBLE, OPTIMAL, SolverConfig, solve, split_costs


def test_split_costs_worked():
    s = split_costs([3, 4, 1, 1, -1, 5])
    assert s.plus.tolist() == [3, 4, 1, 1, 0, 5]
    assert s.minus.tolist() == [0, 0, 0, 0, -1, 0]


@pytest.mark.parametrize("c", [[-1.0, -2.5], [0.0, 0.0], [2.0, -3.0]])
def test_split_costs_parts(c):
    s = split_costs(c)
    assert np.all(s.plus >= 0) and np.all(s.minus <= 0)
    np.testing.assert_array_equal(s.plus + s.minus, c)
    assert np.all(s.plus * s.minus == 0)


def test_split_costs_rejects_nan():
    with pytest.raises(ValueError):
        split_costs([1.0, float("nan")])


def test_solve_worked(worked):
    rep = solve(worked)
    assert rep.status == OPTIMAL
    np.testing.assert_allclose(rep.x_star, [0.7, 0, 0, 0.65, 1, 0], atol=1e-9)
    assert rep.objective == pytest.approx(1.75, abs=1e-12)
    assert rep.z1 == pytest.approx(2.75, abs=1e-12)
    assert rep.z2 == pytest.approx(-1.0, abs=1e-12)
    assert rep.e_star == (5, 4, 1, 5)


def test_solve_row7(corpus):
    entry = next(e for e in corpus if e.problem == 7)
    rep = solve(entry.instance)
    assert rep.objective == pytest.approx(-5.8352, abs=5e-3)


def test_solve_infeasible(tiny_inconsistent):
    rep = solve(tiny_inconsistent)
    assert rep.status == INFEASIBLE
    assert rep.x_star is None and rep.objective is None and rep.stats is None
    doc = rep.to_dict()
    assert doc["status"] == "infeasible"
    json.dumps(doc)


def test_report_fields(worked):
    doc = solve(worked).to_dict()
    assert list(doc) == ["status", "x_star", "objective", "z1", "z2", "e_star",
                         "max_solution", "index_sets", "stats", "tolerance"]
    assert json.loads(json.dumps(doc)) == doc


def test_invalid_tolerance():
    with pytest.raises(ValueError):
        SolverConfig(tol=0.0)


def test_report_invariants(random_instances):
    for inst in random_instances:
        rep = solve(inst)
        assert rep.objective == pytest.approx(rep.z1 + rep.z2, abs=1e-12)
        assert dot(inst.c, rep.x_star) == pytest.approx(
            dot(np.maximum(inst.c, 0), rep.x_star) + dot(np.minimum(inst.c, 0), rep.x_star), abs=1e-12)
        np.testing.assert_allclose(compose(inst.A, rep.x_star), inst.b, atol=1e-9)
        assert np.all(rep.x_star <= rep.max_solution + 1e-12)


def test_no_sample_beats_optimum(random_instances):
    for inst in random_instances[:50]:
        rep = solve(inst)
        pts = np.array(sample_feasible(inst, 2000, seed=3))
        assert (pts @ inst.c).min() >= rep.objective - 1e-9, inst.name


@pytest.mark.parametrize("scale", [0.5, 3.0, 1000.0])
def test_positive_scaling_invariance(random_instances, scale):
    for inst in random_instances[:60]:
        base = solve(inst)
        scaled = solve(Instance(c=inst.c * scale, A=inst.A, b=inst.b))
        assert scaled.e_star == base.e_star
        np.testing.assert_array_equal(scaled.x_star, base.x_star)
        assert scaled.objective == pytest.approx(scale * base.objective, rel=1e-9, abs=1e-9)
