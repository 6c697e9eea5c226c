"""Problem data: ``min c.x  s.t.  A o x = b,  x in [0, 1]^n``.

Instances are read from and written to a small JSON document::

    {"name": "optional", "c": [...n...], "A": [[...n...], ...m rows...], "b": [...m...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from numbers import Real
from pathlib import Path

import numpy as np

from .algebra import compose, unit_array
from .errors import DimensionError, InstanceSyntaxError, RangeError


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Instance:
    c: np.ndarray
    A: np.ndarray
    b: np.ndarray
    name: str | None = None

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float)
        A = np.asarray(self.A, dtype=float)
        b = np.asarray(self.b, dtype=float)
        if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
            raise DimensionError(f"A must be a non-empty m x n matrix, got shape {A.shape}")
        m, n = A.shape
        if c.shape != (n,):
            raise DimensionError(f"c has length {c.size}, expected n = {n}")
        if b.shape != (m,):
            raise DimensionError(f"b has length {b.size}, expected m = {m}")
        if not np.all(np.isfinite(c)):
            raise RangeError("c contains non-finite entries")
        object.__setattr__(self, "c", _frozen(c))
        object.__setattr__(self, "A", _frozen(unit_array(A, "A")))
        object.__setattr__(self, "b", _frozen(unit_array(b, "b")))

    @property
    def m(self) -> int:
        return self.A.shape[0]

    @property
    def n(self) -> int:
        return self.A.shape[1]

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.name == other.name
            and np.array_equal(self.c, other.c)
            and np.array_equal(self.A, other.A)
            and np.array_equal(self.b, other.b)
        )

    __hash__ = None

    def to_dict(self) -> dict:
        out = {}
        if self.name is not None:
            out["name"] = self.name
        out["c"] = self.c.tolist()
        out["A"] = self.A.tolist()
        out["b"] = self.b.tolist()
        return out


def _number_list(value, key: str) -> list[float]:
    if not isinstance(value, list):
        raise InstanceSyntaxError(f'"{key}" must be an array of numbers')
    for v in value:
        # bool is a subclass of int; reject it explicitly
        if isinstance(v, bool) or not isinstance(v, Real):
            raise InstanceSyntaxError(f'"{key}" contains a non-numeric entry {v!r}')
    return [float(v) for v in value]


def instance_from_dict(doc) -> Instance:
    if not isinstance(doc, dict):
        raise InstanceSyntaxError("instance document must be a JSON object")
    missing = [k for k in ("c", "A", "b") if k not in doc]
    if missing:
        raise InstanceSyntaxError(f"instance document is missing key(s): {', '.join(missing)}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InstanceSyntaxError('"name" must be a string')
    c = _number_list(doc["c"], "c")
    b = _number_list(doc["b"], "b")
    if not isinstance(doc["A"], list) or not doc["A"]:
        raise InstanceSyntaxError('"A" must be a non-empty array of rows')
    rows = [_number_list(row, "A") for row in doc["A"]]
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise DimensionError(f"A has ragged rows (lengths {sorted(widths)})")
    return Instance(c=c, A=rows, b=b, name=name)


def parse_instance(text: str) -> Instance:
    """Parse and validate an instance document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceSyntaxError(f"malformed JSON: {exc}") from exc
    return instance_from_dict(doc)


def serialize_instance(inst: Instance) -> str:
    """Instance document with one matrix row per line.

    Floats are written with ``repr`` precision, so parsing the output gives
    back an identical instance.
    """
    doc = inst.to_dict()
    lines = ["{"]
    if "name" in doc:
        lines.append(f'  "name": {json.dumps(doc["name"])},')
    lines.append(f'  "c": {json.dumps(doc["c"])},')
    lines.append('  "A": [')
    rows = [f"    {json.dumps(row)}" for row in doc["A"]]
    lines.append(",\n".join(rows))
    lines.append("  ],")
    lines.append(f'  "b": {json.dumps(doc["b"])}')
    lines.append("}")
    return "\n".join(lines)


def load_instance(path) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def save_instance(inst: Instance, path) -> None:
    Path(path).write_text(serialize_instance(inst) + "\n", encoding="utf-8")


def generate_random(
    m: int,
    n: int,
    seed: int,
    consistent: bool = True,
    grid: int | None = None,
    name: str | None = None,
) -> Instance:
    """Draw a random instance with a numpy PCG64 generator.

    With ``consistent`` set, a hidden point ``x0`` is drawn and ``b`` is
    taken as ``compose(A, x0)``, so the system always has a solution.
    Otherwise ``b`` is uniform and the system may be inconsistent. Costs are
    uniform on [-10, 10].

    ``grid`` (optional) snaps ``A``, ``x0`` and ``b`` to multiples of
    ``1/grid``; coarse grids produce ties and therefore larger tight sets.
    """
    if m < 1 or n < 1:
        raise DimensionError(f"dimensions must be positive, got m={m}, n={n}")
    rng = np.random.default_rng(seed)

    def draw(shape):
        vals = rng.random(shape)
        if grid is not None:
            vals = np.round(vals * grid) / grid
        return vals

    A = draw((m, n))
    if consistent:
        x0 = draw(n)
        b = compose(A, x0)
        if grid is not None:
            b = np.round(b * grid) / grid
    else:
        b = draw(m)
    c = rng.uniform(-10.0, 10.0, size=n)
    return Instance(c=c, A=A, b=b, name=name)
