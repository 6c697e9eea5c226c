"""End-to-end solve: maximum solution, consistency, index sets, cost split,
branch-and-bound on the positive-cost part, and assembly of the optimum.

The optimum takes the maximum solution on coordinates with ``c_j <= 0`` and
the best candidate found by branch-and-bound on coordinates with ``c_j > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import DEFAULT_TOL, dot
from .bnb import BnbConfig, BnbStats, solve_z1
from .feasibility import IndexSets, check_consistency, index_sets, max_solution
from .instance import Instance

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class CostSplit:
    plus: np.ndarray
    minus: np.ndarray


def split_costs(c) -> CostSplit:
    c = np.asarray(c, dtype=float)
    if not np.all(np.isfinite(c)):
        raise ValueError("cost vector must be finite")
    return CostSplit(plus=np.maximum(c, 0.0), minus=np.minimum(c, 0.0))


@dataclass(frozen=True)
class SolverConfig:
    tol: float = DEFAULT_TOL
    row_order: str = "given"
    trace: bool = False

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")

    def bnb(self) -> BnbConfig:
        return BnbConfig(row_order=self.row_order, trace=self.trace)


@dataclass
class SolveReport:
    status: str
    x_star: np.ndarray | None
    objective: float | None
    z1: float | None
    z2: float | None
    e_star: tuple[int, ...] | None
    max_solution: np.ndarray
    index_sets: IndexSets
    stats: BnbStats | None
    tolerance: float
    trace: list[dict] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        def arr(v):
            return None if v is None else [float(t) for t in v]

        return {
            "status": self.status,
            "x_star": arr(self.x_star),
            "objective": self.objective,
            "z1": self.z1,
            "z2": self.z2,
            "e_star": None if self.e_star is None else list(self.e_star),
            "max_solution": arr(self.max_solution),
            "index_sets": self.index_sets.to_dict(),
            "stats": None if self.stats is None else self.stats.to_dict(),
            "tolerance": self.tolerance,
        }


def solve(inst: Instance, config: SolverConfig | None = None) -> SolveReport:
    config = config or SolverConfig()
    tol = config.tol
    xbar = max_solution(inst).point
    if not check_consistency(inst, xbar, tol):
        return SolveReport(
            status=INFEASIBLE,
            x_star=None,
            objective=None,
            z1=None,
            z2=None,
            e_star=None,
            max_solution=xbar,
            index_sets=index_sets(inst, xbar, tol, strict=False),
            stats=None,
            tolerance=tol,
        )

    sets = index_sets(inst, xbar, tol)
    costs = split_costs(inst.c)
    found = solve_z1(inst, costs.plus, sets, config.bnb(), tol)
    x_star = np.where(inst.c > 0, found.point, xbar)
    return SolveReport(
        status=OPTIMAL,
        x_star=x_star,
        objective=dot(inst.c, x_star),
        z1=found.z1,
        z2=dot(costs.minus, xbar),
        e_star=found.e_star,
        max_solution=xbar,
        index_sets=sets,
        stats=found.stats,
        tolerance=tol,
        trace=found.trace,
    )
