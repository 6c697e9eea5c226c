"""Candidate minimal solutions built from per-row column choices.

An assignment ``e`` picks one column ``e[i]`` (1-based) for every row ``i``.
Row ``i`` contributes the unit candidate ``b_i + 1 - a_ij`` at column
``j = e[i]``; the assembled candidate is the componentwise max over rows.
Every minimal solution of a consistent system is the assembled candidate of
some assignment drawn from the tight sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .algebra import DEFAULT_TOL
from .errors import AssignmentError
from .feasibility import IndexSets, index_sets, potential_sets
from .instance import Instance

Assignment = tuple[Optional[int], ...]


@dataclass(frozen=True, eq=False)
class CandidatePoint:
    point: np.ndarray
    origin: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"point": self.point.tolist(), "origin": list(self.origin)}


def unit_values(inst: Instance, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Matrix of unit-candidate heights ``b_i + 1 - a_ij``.

    Rows with ``b_i`` zero (within ``tol``) contribute nothing and are all
    zeros. Entries outside the potential sets are meaningless.
    """
    vals = inst.b[:, None] + 1.0 - inst.A
    vals[inst.b <= tol, :] = 0.0
    return vals


def _check_column(inst: Instance, i: int, j: int, tol: float) -> None:
    if not 1 <= i <= inst.m:
        raise AssignmentError(f"row index {i} out of range 1..{inst.m}")
    if not (1 <= j <= inst.n and inst.A[i - 1, j - 1] >= inst.b[i - 1] - tol):
        raise AssignmentError(f"column {j} is not in the potential set of row {i}")


def unit_candidate(i: int, j: int, inst: Instance, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Smallest point that makes row ``i`` (1-based) tight through column ``j``."""
    _check_column(inst, i, j, tol)
    out = np.zeros(inst.n)
    if inst.b[i - 1] > tol:
        out[j - 1] = inst.b[i - 1] + 1.0 - inst.A[i - 1, j - 1]
    return out


def partial_point(e: Sequence[Optional[int]], units: np.ndarray) -> np.ndarray:
    """Componentwise max of the unit candidates of the assigned rows."""
    x = np.zeros(units.shape[1])
    for i, j in enumerate(e):
        if j is not None and units[i, j - 1] > x[j - 1]:
            x[j - 1] = units[i, j - 1]
    return x


def assemble_candidate(e: Sequence[Optional[int]], inst: Instance, tol: float = DEFAULT_TOL) -> CandidatePoint:
    if len(e) != inst.m:
        raise AssignmentError(f"assignment has {len(e)} entries, expected {inst.m}")
    if any(j is None for j in e):
        raise AssignmentError("cannot assemble a candidate from a partial assignment")
    for i, j in enumerate(e, start=1):
        _check_column(inst, i, j, tol)
    return CandidatePoint(point=partial_point(e, unit_values(inst, tol)), origin=tuple(e))


def enumerate_assignments(sets: Sequence[Sequence[int]]) -> Iterator[tuple[int, ...]]:
    """Lexicographic product of per-row column sets (empty if any set is empty)."""
    return itertools.product(*(sorted(s) for s in sets))


def enumerate_tight(inst: Instance, sets: IndexSets) -> Iterator[tuple[int, ...]]:
    return enumerate_assignments(sets.tight)


def enumerate_all(inst: Instance, tol: float = DEFAULT_TOL) -> Iterator[tuple[int, ...]]:
    return enumerate_assignments(potential_sets(inst, tol))


def _all_close(x: np.ndarray, y: np.ndarray, tol: float) -> bool:
    return bool(np.all(np.abs(x - y) <= tol))


def distinct_candidates(inst: Instance, tol: float = DEFAULT_TOL, sets: IndexSets | None = None) -> list[CandidatePoint]:
    """Assembled candidates over the tight sets, duplicates (within ``tol``) removed.

    The first assignment in enumeration order is kept as the origin.
    """
    if sets is None:
        sets = index_sets(inst, tol=tol)
    units = unit_values(inst, tol)
    kept: list[CandidatePoint] = []
    for e in enumerate_tight(inst, sets):
        x = partial_point(e, units)
        if not any(_all_close(x, k.point, tol) for k in kept):
            kept.append(CandidatePoint(point=x, origin=e))
    return kept


def extract_minimal_solutions(inst: Instance, tol: float = DEFAULT_TOL, sets: IndexSets | None = None) -> list[CandidatePoint]:
    """Pairwise-minimal members of the distinct tight candidates.

    A point is dropped when another retained point is ``<=`` it everywhere
    (within ``tol``) and strictly smaller somewhere. The result, ordered by
    origin, contains every minimal solution of the system.
    """
    pool = distinct_candidates(inst, tol, sets)
    out = []
    for x in pool:
        dominated = any(
            y is not x
            and np.all(y.point <= x.point + tol)
            and np.any(y.point < x.point - tol)
            for y in pool
        )
        if not dominated:
            out.append(x)
    return out
