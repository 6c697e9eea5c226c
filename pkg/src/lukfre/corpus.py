"""Bundled benchmark instances and their published reference values."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .feasibility import potential_sets
from .instance import Instance, parse_instance

# published reference values per problem: |E|, |E-bar|, visited nodes, visited paths
REFERENCE_TABLE = {
    1: (288, 4, 6, 1),
    2: (480, 3, 6, 1),
    3: (1200, 1, 5, 1),
    4: (24, 1, 5, 1),
    5: (1800, 2, 7, 1),
    6: (4500, 2, 9, 1),
    7: (2592, 2, 9, 2),
    8: (6048, 4, 13, 1),
}


@dataclass(frozen=True)
class CorpusEntry:
    instance: Instance
    file: str
    reference: dict
    problem: int | None = None
    listing_position: int | None = None
    listing_label: str | None = None


def _data(name: str) -> str:
    return resources.files("lukfre").joinpath("corpus", name).read_text(encoding="utf-8")


def manifest() -> dict:
    return json.loads(_data("manifest.json"))


def load_bundled(name: str) -> Instance:
    return parse_instance(_data(name))


def worked_example() -> CorpusEntry:
    ref = manifest()["worked_example"]
    return CorpusEntry(instance=load_bundled(ref["file"]), file=ref["file"], reference=ref["reference"])


def benchmark_entries() -> list[CorpusEntry]:
    out = []
    for rec in manifest()["benchmark"]:
        out.append(CorpusEntry(
            instance=load_bundled(rec["file"]),
            file=rec["file"],
            reference=rec["reference"],
            problem=rec["problem"],
            listing_position=rec["listing_position"],
            listing_label=rec["listing_label"],
        ))
    return out


def e_cardinality(inst: Instance, tol: float = 1e-9) -> int:
    size = 1
    for s in potential_sets(inst, tol):
        size *= len(s)
    return size


def reconcile(instances: list[Instance], tol: float = 1e-9) -> tuple[dict[int, Instance], list[tuple[Instance, int]]]:
    """Assign instances to reference problems by matching the product of potential-set sizes.

    Returns ``(row -> instance, unmatched)`` where ``unmatched`` holds
    ``(instance, cardinality)`` pairs that fit no row or collide with an
    earlier match. Nothing is force-assigned.
    """
    by_card = {card: row for row, (card, *_rest) in REFERENCE_TABLE.items()}
    matched: dict[int, Instance] = {}
    unmatched = []
    for inst in instances:
        card = e_cardinality(inst, tol)
        row = by_card.get(card)
        if row is None or row in matched:
            unmatched.append((inst, card))
        else:
            matched[row] = inst
    return matched, unmatched
