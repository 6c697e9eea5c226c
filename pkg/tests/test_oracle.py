import numpy as np
import pytest

from lukfre.algebra import compose
from lukfre.errors import EnumerationCapError, InconsistentSystemError
from lukfre.feasibility import max_solution
from lukfre.instance import Instance
from lukfre.oracle import brute_force_z1, property_audit, sample_boxes, sample_feasible


def test_brute_force_worked(worked):
    z, e = brute_force_z1(worked, np.maximum(worked.c, 0))
    assert z == pytest.approx(2.75, abs=1e-12)
    assert e == (5, 4, 1, 5)


def test_brute_force_tie_goes_to_first(worked):
    z, e = brute_force_z1(worked, np.zeros(6))
    assert (z, e) == (0.0, (3, 4, 1, 5))


def test_brute_force_errors(worked, tiny_inconsistent):
    with pytest.raises(InconsistentSystemError):
        brute_force_z1(tiny_inconsistent, [1.0])
    with pytest.raises(EnumerationCapError):
        brute_force_z1(worked, np.ones(6), cap=7)


def test_samples_worked(worked):
    pts = sample_feasible(worked, 100, seed=0)
    assert len(pts) == 100
    for x in pts:
        np.testing.assert_allclose(compose(worked.A, x), [0.85, 0.6, 0.5, 0.1], atol=1e-9)


def test_samples_lie_in_their_boxes(random_instances):
    for inst in random_instances[:50]:
        xbar = max_solution(inst).point
        pts, _, lows = sample_boxes(inst, 300, seed=5)
        assert np.all(lows <= pts) and np.all(pts <= xbar)


def test_degenerate_box():
    inst = Instance(c=[1.0], A=[[1.0]], b=[0.5])
    pts = sample_feasible(inst, 10, seed=0)
    assert all(p.tolist() == [0.5] for p in pts)


def test_zero_samples(worked):
    assert sample_feasible(worked, 0, seed=0) == []


def test_audit_worked(worked):
    rep = property_audit(worked)
    assert rep.passed, rep.failures()
    assert (rep.e_cardinality, rep.tight_cardinality) == (60, 8)
    assert rep.oracle_z1 == pytest.approx(2.75)
    assert {c.name for c in rep.checks} >= {
        "candidates_below_max", "tight_candidates_feasible",
        "loose_candidates_infeasible", "cardinalities", "bnb_matches_brute_force"}


def test_audit_corpus(corpus):
    for entry in corpus:
        rep = property_audit(entry.instance, samples=200)
        assert rep.passed, (entry.file, rep.failures())
        assert rep.e_cardinality == entry.reference["e_cardinality"]
        assert rep.tight_cardinality == entry.reference["tight_cardinality"]


def test_audit_inconsistent(tiny_inconsistent):
    rep = property_audit(tiny_inconsistent)
    assert not rep.consistent
    assert rep.passed
    assert any(c.note and "skipped" in c.note for c in rep.checks)
    assert rep.to_dict()["oracle_z1"] is None


def test_audit_skips_large_e_pass(worked):
    rep = property_audit(worked, full_e_cap=10, samples=0)
    check = next(c for c in rep.checks if c.name == "loose_candidates_infeasible")
    assert check.passed and "skipped" in check.note


def test_failed_check_carries_witness(worked, monkeypatch):
    from lukfre import bnb

    real = bnb.solve_z1

    def broken(*args, **kwargs):
        res = real(*args, **kwargs)
        res.z1 += 1.0
        return res

    monkeypatch.setattr(bnb, "solve_z1", broken)
    rep = property_audit(worked, samples=0)
    failed = rep.failures()
    assert [c.name for c in failed] == ["bnb_matches_brute_force"]
    assert failed[0].witness["bnb_e"] == [5, 4, 1, 5]
