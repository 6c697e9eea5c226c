import numpy as np
import pytest

from lukfre.algebra import compose
from lukfre.candidates import (
    assemble_candidate,
    distinct_candidates,
    enumerate_all,
    enumerate_tight,
    extract_minimal_solutions,
    unit_candidate,
)
from lukfre.errors import AssignmentError
from lukfre.feasibility import IndexSets, index_sets, max_solution
from lukfre.instance import Instance


def test_unit_candidates_worked(worked):
    np.testing.assert_allclose(unit_candidate(1, 3, worked), [0, 0, 0.95, 0, 0, 0], atol=1e-12)
    np.testing.assert_allclose(unit_candidate(4, 5, worked), [0, 0, 0, 0, 1, 0], atol=1e-12)


def test_unit_candidate_zero_rhs():
    inst = Instance(c=[1, 1], A=[[0.4, 0.9]], b=[0.0])
    assert unit_candidate(1, 2, inst).tolist() == [0.0, 0.0]


def test_unit_candidate_rejects_column_outside_potential(worked):
    with pytest.raises(AssignmentError):
        unit_candidate(1, 1, worked)  # a_11 = 0.5 < 0.85
    with pytest.raises(AssignmentError):
        unit_candidate(9, 1, worked)


def test_assemble_worked(worked):
    cand = assemble_candidate((5, 4, 1, 5), worked)
    np.testing.assert_allclose(cand.point, [0.7, 0, 0, 0.65, 1, 0], atol=1e-12)
    assert cand.origin == (5, 4, 1, 5)
    other = assemble_candidate((3, 4, 1, 5), worked)
    np.testing.assert_allclose(other.point, [0.7, 0, 0.95, 0.65, 1, 0], atol=1e-12)
    np.testing.assert_allclose(compose(worked.A, other.point), worked.b, atol=1e-9)


def test_assemble_single_row():
    inst = Instance(c=[1, 1, 1], A=[[0.2, 0.9, 0.7]], b=[0.6])
    for j in (2, 3):
        assert np.array_equal(assemble_candidate((j,), inst).point, unit_candidate(1, j, inst))


def test_assemble_rejects_partial(worked):
    with pytest.raises(AssignmentError):
        assemble_candidate((5, None, 1, 5), worked)
    with pytest.raises(AssignmentError):
        assemble_candidate((5, 4, 1), worked)


def test_enumerate_tight_counts(worked, corpus):
    es = list(enumerate_tight(worked, index_sets(worked)))
    assert len(es) == 8
    assert es == sorted(es)
    assert es[0] == (3, 4, 1, 5)
    row7 = next(e for e in corpus if e.problem == 7).instance
    assert len(list(enumerate_tight(row7, index_sets(row7)))) == 2


def test_enumerate_empty_factor(worked):
    sets = IndexSets(potential=((1,), (1,)), tight=((1,), ()))
    assert list(enumerate_tight(worked, sets)) == []


def test_minimal_two_incomparable():
    inst = Instance(c=[1, 1], A=[[0.9, 0.9]], b=[0.8])
    mins = extract_minimal_solutions(inst)
    pts = sorted(tuple(np.round(p.point, 12)) for p in mins)
    assert pts == [(0.0, 0.9), (0.9, 0.0)]


# frozen from a hand-written enumeration of the 8 tight candidates
WORKED_MINIMAL = {
    (5, 4, 1, 5): [0.7, 0, 0, 0.65, 1, 0],
    (5, 4, 2, 5): [0, 0.7, 0, 0.65, 1, 0],
    (5, 6, 1, 5): [0.7, 0, 0, 0, 1, 0.8],
    (5, 6, 2, 5): [0, 0.7, 0, 0, 1, 0.8],
}


def test_minimal_worked(worked):
    assert len(distinct_candidates(worked)) == 8
    mins = extract_minimal_solutions(worked)
    assert {p.origin for p in mins} == set(WORKED_MINIMAL)
    for p in mins:
        np.testing.assert_allclose(p.point, WORKED_MINIMAL[p.origin], atol=1e-12)


def test_duplicates_collapse():
    inst = Instance(c=[1, 1], A=[[0.9, 0.9], [0.9, 0.9]], b=[0.8, 0.8])
    distinct = distinct_candidates(inst)
    assert len(list(enumerate_tight(inst, index_sets(inst)))) == 4
    assert len(distinct) == 3
    assert [d.origin for d in distinct] == [(1, 1), (1, 2), (2, 2)]
    assert len(extract_minimal_solutions(inst)) == 2


def test_candidates_below_max_and_feasible(random_instances, worked):
    for inst in random_instances + [worked]:
        xbar = max_solution(inst).point
        for e in enumerate_tight(inst, index_sets(inst)):
            x = assemble_candidate(e, inst).point
            assert np.all(x <= xbar + 1e-9), (inst.name, e)
            np.testing.assert_allclose(compose(inst.A, x), inst.b, atol=1e-9)


def test_loose_assignments_infeasible(worked):
    tight = set(enumerate_tight(worked, index_sets(worked)))
    loose = [e for e in enumerate_all(worked) if e not in tight]
    assert len(loose) == 52
    for e in loose:
        x = assemble_candidate(e, worked).point
        assert np.max(np.abs(compose(worked.A, x) - worked.b)) > 1e-9, e


def test_minimal_points_are_feasible_and_undominated(random_instances):
    for inst in random_instances[:80]:
        mins = extract_minimal_solutions(inst)
        assert mins
        for p in mins:
            np.testing.assert_allclose(compose(inst.A, p.point), inst.b, atol=1e-9)
            for q in mins:
                if q is not p:
                    assert not (np.all(q.point <= p.point + 1e-9) and np.any(q.point < p.point - 1e-9))
