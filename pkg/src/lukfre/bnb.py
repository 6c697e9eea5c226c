"""Best-first branch-and-bound over the tight assignment space.

The search minimizes ``c_plus . X(e)`` for ``e`` ranging over the product of
the tight sets, where ``c_plus >= 0``. A node fixes the columns of the first
``depth`` rows (in the configured row order). Its bound is ``c_plus`` dotted
with the componentwise max of the unit candidates fixed so far; completing
the assignment can only raise components, so the bound is valid.

Live nodes sit in a heap keyed by ``(bound, -depth, last column, serial)``:
lowest bound first, deeper nodes before shallower ones on ties.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .algebra import DEFAULT_TOL, dot
from .candidates import Assignment, partial_point, unit_values
from .errors import InconsistentSystemError
from .feasibility import IndexSets
from .instance import Instance

ROW_ORDERS = ("given", "ascending-tight")


@dataclass(frozen=True)
class BnbConfig:
    row_order: str = "given"
    trace: bool = False

    def __post_init__(self):
        if self.row_order not in ROW_ORDERS:
            raise ValueError(f"unknown row order {self.row_order!r}; choose from {ROW_ORDERS}")


@dataclass
class BnbStats:
    nodes_visited: int = 0
    paths_completed: int = 0
    nodes_pruned: int = 0
    incumbent_updates: int = 0

    def to_dict(self) -> dict:
        return {
            "nodes_visited": self.nodes_visited,
            "paths_completed": self.paths_completed,
            "nodes_pruned": self.nodes_pruned,
            "incumbent_updates": self.incumbent_updates,
        }


@dataclass(frozen=True, eq=False)
class Node:
    partial: Assignment
    partial_point: np.ndarray
    bound: float
    depth: int


@dataclass
class BnbResult:
    e_star: tuple[int, ...]
    point: np.ndarray
    z1: float
    stats: BnbStats
    trace: list[dict] = field(default_factory=list)


def lower_bound(partial: Sequence[Optional[int]], c_plus, inst: Instance, tol: float = DEFAULT_TOL) -> float:
    """Bound on ``c_plus . X(e)`` over every completion ``e`` of ``partial``.

    Two rows picking the same column share one component (max, not sum).
    """
    return dot(c_plus, partial_point(partial, unit_values(inst, tol)))


def row_order(sets: IndexSets, how: str = "given") -> list[int]:
    """0-based row indices in branching order."""
    rows = list(range(len(sets.tight)))
    if how == "ascending-tight":
        rows.sort(key=lambda i: (len(sets.tight[i]), i))
    elif how != "given":
        raise ValueError(f"unknown row order {how!r}")
    return rows


def solve_z1(
    inst: Instance,
    c_plus,
    sets: IndexSets,
    config: BnbConfig | None = None,
    tol: float = DEFAULT_TOL,
) -> BnbResult:
    """Minimize ``c_plus . X(e)`` over the tight assignments.

    Ties are pruned: a live node whose bound is not strictly below the
    incumbent is discarded, and the first incumbent found is kept. The
    comparison is exact so the returned value equals an exhaustive minimum
    bit for bit.
    """
    config = config or BnbConfig()
    c_plus = np.asarray(c_plus, dtype=float)
    if c_plus.shape != (inst.n,) or np.any(c_plus < 0):
        raise ValueError("c_plus must be a nonnegative vector of length n")
    empty = [i + 1 for i, s in enumerate(sets.tight) if not s]
    if empty:
        raise InconsistentSystemError(f"tight set of row {empty[0]} is empty")

    units = unit_values(inst, tol)
    order = row_order(sets, config.row_order)
    m = inst.m
    stats = BnbStats()
    trace: list[dict] = []
    serial = itertools.count()
    heap: list = []
    best: Node | None = None

    def log(node: Node, action: str) -> None:
        if config.trace:
            trace.append({
                "depth": node.depth,
                "assignment": list(node.partial),
                "bound": node.bound,
                "action": action,
            })

    def beaten(node: Node) -> bool:
        return best is not None and node.bound >= best.bound

    def admit(node: Node, column: int) -> None:
        nonlocal best
        stats.nodes_visited += 1
        if node.depth == m:
            stats.paths_completed += 1
            if beaten(node):
                stats.nodes_pruned += 1
                log(node, "pruned")
            else:
                best = node
                stats.incumbent_updates += 1
                log(node, "incumbent")
        elif beaten(node):
            stats.nodes_pruned += 1
            log(node, "pruned")
        else:
            heapq.heappush(heap, (node.bound, -node.depth, column, next(serial), node))

    def expand(node: Node) -> None:
        log(node, "expanded")
        row = order[node.depth]
        for j in sorted(sets.tight[row]):
            partial = list(node.partial)
            partial[row] = j
            point = node.partial_point.copy()
            point[j - 1] = max(point[j - 1], units[row, j - 1])
            admit(Node(tuple(partial), point, dot(c_plus, point), node.depth + 1), j)

    expand(Node((None,) * m, np.zeros(inst.n), 0.0, 0))
    while heap:
        node = heapq.heappop(heap)[-1]
        if beaten(node):
            stats.nodes_pruned += 1
            log(node, "pruned")
            continue
        expand(node)

    assert best is not None  # every tight set is nonempty, so a leaf is reached
    return BnbResult(
        e_star=tuple(best.partial),
        point=best.partial_point,
        z1=best.bound,
        stats=stats,
        trace=trace,
    )
