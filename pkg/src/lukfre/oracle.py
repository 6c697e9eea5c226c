"""Brute-force verifier.

Nothing here calls into the candidate assembly or the branch-and-bound: the
index sets, maximum solution and candidates are rebuilt straight from their
definitions so the audit is an independent second route.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .algebra import DEFAULT_TOL
from .errors import EnumerationCapError, InconsistentSystemError
from .instance import Instance

DEFAULT_CAP = 10**6
FULL_E_CAP = 10**4


# -- definitions, written out longhand ---------------------------------------

def _potential(inst: Instance, tol: float) -> list[list[int]]:
    A, b = inst.A.tolist(), inst.b.tolist()
    return [[j + 1 for j in range(inst.n) if A[i][j] >= b[i] - tol] for i in range(inst.m)]


def _max_point(inst: Instance) -> list[float]:
    A, b = inst.A.tolist(), inst.b.tolist()
    return [min(min(1.0, b[i] + 1.0 - A[i][j]) for i in range(inst.m)) for j in range(inst.n)]


def _tight(inst: Instance, xbar: Sequence[float], tol: float) -> list[list[int]]:
    A, b = inst.A.tolist(), inst.b.tolist()
    return [
        [j for j in row if abs(max(A[i][j - 1] + xbar[j - 1] - 1.0, 0.0) - b[i]) <= tol]
        for i, row in enumerate(_potential(inst, tol))
    ]


def _assemble(inst: Instance, e: Sequence[int], tol: float) -> list[float]:
    A, b = inst.A, inst.b
    x = [0.0] * inst.n
    for i, j in enumerate(e):
        if b[i] > tol:
            x[j - 1] = max(x[j - 1], float(b[i] + 1.0 - A[i, j - 1]))
    return x


def _assemble_many(inst: Instance, es: np.ndarray, tol: float) -> np.ndarray:
    """Vectorized assembly; ``es`` is a (k, m) array of 1-based columns."""
    k = es.shape[0]
    out = np.zeros((k, inst.n))
    rows = np.arange(k)
    for i in range(inst.m):
        if inst.b[i] <= tol:
            continue
        cols = es[:, i] - 1
        vals = inst.b[i] + 1.0 - inst.A[i, cols]
        np.maximum.at(out, (rows, cols), vals)
    return out


def _residuals(inst: Instance, X: np.ndarray) -> np.ndarray:
    """Max |compose(A, x) - b| for each row of ``X``."""
    comp = np.maximum(inst.A[None, :, :] + X[:, None, :] - 1.0, 0.0).max(axis=2)
    return np.abs(comp - inst.b[None, :]).max(axis=1)


def _product_array(sets: Sequence[Sequence[int]], m: int) -> np.ndarray:
    combos = list(itertools.product(*sets))
    return np.array(combos, dtype=int).reshape(len(combos), m)


# -- public oracle API --------------------------------------------------------

def brute_force_z1(inst: Instance, c_plus, tol: float = DEFAULT_TOL, cap: int = DEFAULT_CAP) -> tuple[float, tuple[int, ...]]:
    """Exhaustive minimum of ``c_plus . X(e)`` over the tight assignments.

    Ties go to the lexicographically first assignment.
    """
    xbar = _max_point(inst)
    tight = _tight(inst, xbar, tol)
    size = math.prod(len(s) for s in tight)
    if size == 0:
        raise InconsistentSystemError("some tight set is empty; nothing to enumerate")
    if size > cap:
        raise EnumerationCapError(f"{size} tight assignments exceed the cap of {cap}")
    c_plus = [float(v) for v in c_plus]
    best_z, best_e = math.inf, None
    for e in itertools.product(*tight):
        x = _assemble(inst, e, tol)
        z = math.fsum(cj * xj for cj, xj in zip(c_plus, x))
        if z < best_z:
            best_z, best_e = z, e
    return best_z, tuple(best_e)


def sample_boxes(inst: Instance, count: int, seed: int, tol: float = DEFAULT_TOL):
    """Uniform draws from boxes ``[X(e), xbar]`` with ``e`` chosen row by row.

    Returns ``(points, assignments, lower_corners)``; every point is checked
    to satisfy the equations before returning.
    """
    xbar = np.array(_max_point(inst))
    tight = _tight(inst, xbar.tolist(), tol)
    if any(not s for s in tight):
        raise InconsistentSystemError("cannot sample an inconsistent system")
    if count == 0:
        return np.zeros((0, inst.n)), np.zeros((0, inst.m), dtype=int), np.zeros((0, inst.n))
    rng = np.random.default_rng(seed)
    es = np.column_stack([np.asarray(s)[rng.integers(len(s), size=count)] for s in tight])
    # two tight rows can produce the same coordinate an ulp apart
    lows = np.minimum(_assemble_many(inst, es, tol), xbar)
    # hitting exactly lows/xbar must be possible, so draw on the closed box
    points = lows + rng.random((count, inst.n)) * (xbar - lows)
    points = np.minimum(np.maximum(points, lows), xbar)
    res = _residuals(inst, points)
    bad = np.flatnonzero(res > tol)
    if bad.size:
        k = int(bad[0])
        raise AssertionError(
            f"box sample {points[k].tolist()} from e={es[k].tolist()} violates the equations by {res[k]:.3g}"
        )
    return points, es, lows


def sample_feasible(inst: Instance, count: int, seed: int, tol: float = DEFAULT_TOL) -> list[np.ndarray]:
    points, _, _ = sample_boxes(inst, count, seed, tol)
    return list(points)


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None
    note: str | None = None

    def __post_init__(self):
        self.passed = bool(self.passed)

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "witness": self.witness}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class AuditReport:
    instance_name: str
    consistent: bool
    checks: list[Check] = field(default_factory=list)
    e_cardinality: int = 0
    tight_cardinality: int = 0
    oracle_z1: float | None = None
    oracle_e: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "instance_name": self.instance_name,
            "consistent": self.consistent,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "e_cardinality": self.e_cardinality,
            "tight_cardinality": self.tight_cardinality,
            "oracle_z1": self.oracle_z1,
            "oracle_e": None if self.oracle_e is None else list(self.oracle_e),
        }


def property_audit(
    inst: Instance,
    tol: float = DEFAULT_TOL,
    full_e_cap: int = FULL_E_CAP,
    samples: int = 1000,
    seed: int = 0,
    row_order: str = "given",
) -> AuditReport:
    """Cross-check the library against brute force on one instance.

    Failures become report entries carrying a witness; nothing is raised.
    """
    # imported here: the audit targets these modules, the oracle above does not use them
    from . import feasibility
    from .bnb import BnbConfig, solve_z1
    from .solver import SolverConfig, solve

    name = inst.name or "<unnamed>"
    pot = _potential(inst, tol)
    xbar = _max_point(inst)
    e_card = math.prod(len(s) for s in pot)
    report = AuditReport(instance_name=name, consistent=False, e_cardinality=e_card)
    checks = report.checks

    lib_xbar = feasibility.max_solution(inst).point
    gap = float(np.max(np.abs(lib_xbar - np.array(xbar))))
    checks.append(Check("max_solution", gap <= tol, None if gap <= tol else lib_xbar.tolist()))
    lib_pot = feasibility.potential_sets(inst, tol)
    ok = [list(s) for s in lib_pot] == pot
    checks.append(Check("potential_sets", ok, None if ok else [list(s) for s in lib_pot]))

    consistent = bool(np.max(_residuals(inst, np.array([xbar]))) <= tol) and e_card > 0
    lib_consistent = feasibility.check_consistency(inst, lib_xbar, tol)
    checks.append(Check("consistency_verdict", consistent == lib_consistent,
                        None if consistent == lib_consistent else {"library": lib_consistent}))
    if e_card and e_card <= full_e_cap:
        # a solution exists iff some X(e), e in E, is one
        X = _assemble_many(inst, _product_array(pot, inst.m), tol)
        any_feasible = bool(np.any(_residuals(inst, X) <= tol))
        checks.append(Check("consistency_by_enumeration", any_feasible == consistent,
                            None if any_feasible == consistent else {"some_candidate_feasible": any_feasible}))
    report.consistent = consistent
    if not consistent:
        checks.append(Check("candidate_checks", True, note="system is inconsistent; candidate checks skipped"))
        return report

    tight = _tight(inst, xbar, tol)
    report.tight_cardinality = math.prod(len(s) for s in tight)
    lib_sets = feasibility.index_sets(inst, lib_xbar, tol)
    ok = [list(s) for s in lib_sets.tight] == tight
    checks.append(Check("tight_sets", ok, None if ok else [list(s) for s in lib_sets.tight]))
    ok = lib_sets.e_cardinality == e_card and lib_sets.tight_cardinality == report.tight_cardinality
    checks.append(Check("cardinalities", ok, None if ok else
                        [lib_sets.e_cardinality, lib_sets.tight_cardinality]))

    tight_es = _product_array(tight, inst.m)
    X = _assemble_many(inst, tight_es, tol)
    above = np.flatnonzero(np.any(X > np.array(xbar)[None, :] + tol, axis=1))
    checks.append(Check("candidates_below_max", above.size == 0,
                        None if above.size == 0 else tight_es[above[0]].tolist()))
    res = _residuals(inst, X)
    bad = np.flatnonzero(res > tol)
    checks.append(Check("tight_candidates_feasible", bad.size == 0,
                        None if bad.size == 0 else tight_es[bad[0]].tolist()))

    if e_card <= full_e_cap:
        all_es = _product_array(pot, inst.m)
        tight_rows = {tuple(r) for r in tight_es.tolist()}
        loose = np.array([tuple(r) not in tight_rows for r in all_es.tolist()], dtype=bool)
        res = _residuals(inst, _assemble_many(inst, all_es, tol))
        bad = np.flatnonzero(loose & (res <= tol))
        checks.append(Check("loose_candidates_infeasible", bad.size == 0,
                            None if bad.size == 0 else all_es[bad[0]].tolist()))
    else:
        checks.append(Check("loose_candidates_infeasible", True,
                            note=f"skipped: |E| = {e_card} exceeds {full_e_cap}"))

    c_plus = np.maximum(inst.c, 0.0)
    z_or, e_or = brute_force_z1(inst, c_plus, tol)
    report.oracle_z1, report.oracle_e = z_or, e_or
    found = solve_z1(inst, c_plus, lib_sets, BnbConfig(row_order=row_order), tol)
    attained = math.fsum(float(c) * x for c, x in zip(c_plus, _assemble(inst, found.e_star, tol)))
    ok = found.z1 == z_or and attained == z_or
    checks.append(Check("bnb_matches_brute_force", ok, None if ok else
                        {"bnb_z1": found.z1, "bnb_e": list(found.e_star), "oracle_z1": z_or}))

    if samples:
        result = solve(inst, SolverConfig(tol=tol, row_order=row_order))
        points, _, _ = sample_boxes(inst, samples, seed, tol)
        values = points @ inst.c
        k = int(np.argmin(values))
        ok = values[k] >= result.objective - tol
        checks.append(Check("no_sample_beats_optimum", ok, None if ok else points[k].tolist()))
    return report
