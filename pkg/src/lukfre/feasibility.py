"""Maximum solution, consistency test and the per-row index sets.

Column indices in :class:`IndexSets` are 1-based, matching the usual
``J = {1, ..., n}`` labelling of the problem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_TOL, compose
from .errors import InconsistentSystemError
from .instance import Instance

Columns = tuple[int, ...]


@dataclass(frozen=True)
class MaxSolution:
    point: np.ndarray
    row_points: np.ndarray  # row i is the per-constraint bound x_hat_i


@dataclass(frozen=True)
class IndexSets:
    potential: tuple[Columns, ...]
    tight: tuple[Columns, ...]

    def __post_init__(self):
        for i, (pot, tig) in enumerate(zip(self.potential, self.tight)):
            if not set(tig) <= set(pot):
                raise ValueError(f"row {i + 1}: tight set {tig} is not inside {pot}")

    @property
    def e_cardinality(self) -> int:
        return math.prod(len(s) for s in self.potential)

    @property
    def tight_cardinality(self) -> int:
        return math.prod(len(s) for s in self.tight)

    def to_dict(self) -> dict:
        return {
            "potential": [list(s) for s in self.potential],
            "tight": [list(s) for s in self.tight],
            "e_cardinality": self.e_cardinality,
            "tight_cardinality": self.tight_cardinality,
        }


def potential_sets(inst: Instance, tol: float = DEFAULT_TOL) -> list[Columns]:
    """Columns able to reach each right-hand side: ``a_ij >= b_i`` (ties included)."""
    mask = inst.A >= inst.b[:, None] - tol
    return [tuple(int(j) + 1 for j in np.flatnonzero(row)) for row in mask]


def max_solution(inst: Instance) -> MaxSolution:
    # b + 1 - a keeps rounding identical to the unit candidates
    rows = np.minimum(inst.b[:, None] + 1.0 - inst.A, 1.0)
    return MaxSolution(point=rows.min(axis=0), row_points=rows)


def _row_gaps(inst: Instance, xbar) -> np.ndarray:
    return np.abs(compose(inst.A, xbar) - inst.b)


def check_consistency(inst: Instance, xbar=None, tol: float = DEFAULT_TOL) -> bool:
    """True iff the system has a solution, i.e. ``compose(A, xbar) == b`` within ``tol``."""
    if any(not s for s in potential_sets(inst, tol)):
        return False
    if xbar is None:
        xbar = max_solution(inst).point
    return bool(np.all(_row_gaps(inst, xbar) <= tol))


def first_violated_row(inst: Instance, xbar=None, tol: float = DEFAULT_TOL) -> int | None:
    """1-based index of the first row the maximum solution fails to satisfy."""
    if xbar is None:
        xbar = max_solution(inst).point
    gaps = _row_gaps(inst, xbar)
    bad = np.flatnonzero(gaps > tol)
    return int(bad[0]) + 1 if bad.size else None


def _tight_columns(inst: Instance, xbar, tol: float) -> list[Columns]:
    xbar = np.asarray(xbar, dtype=float)
    terms = np.maximum(inst.A + xbar[None, :] - 1.0, 0.0)
    tight = np.abs(terms - inst.b[:, None]) <= tol
    out = []
    for i, pot in enumerate(potential_sets(inst, tol)):
        out.append(tuple(j for j in pot if tight[i, j - 1]))
    return out


def tight_sets(inst: Instance, xbar, tol: float = DEFAULT_TOL) -> list[Columns]:
    """Columns of each potential set where the composition with ``xbar`` is tight."""
    sets = _tight_columns(inst, xbar, tol)
    for i, s in enumerate(sets):
        if not s:
            raise InconsistentSystemError(
                f"row {i + 1} has no tight column at the maximum solution"
            )
    return sets


def index_sets(inst: Instance, xbar=None, tol: float = DEFAULT_TOL, strict: bool = True) -> IndexSets:
    """Bundle potential and tight sets.

    With ``strict=False`` empty tight sets are returned as-is instead of
    raising, which is what reports on inconsistent systems want.
    """
    if xbar is None:
        xbar = max_solution(inst).point
    tight = tight_sets(inst, xbar, tol) if strict else _tight_columns(inst, xbar, tol)
    return IndexSets(potential=tuple(potential_sets(inst, tol)), tight=tuple(tight))
