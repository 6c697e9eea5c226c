"""Lukasiewicz t-norm, its residuum and the max-T composition.

All functions accept Python floats or numpy arrays and broadcast like numpy
ufuncs. Scalars in, float out.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DimensionError, RangeError

#: Values this close outside [0, 1] are snapped onto the boundary.
SNAP = 1e-12

#: Default comparison tolerance used throughout the package.
DEFAULT_TOL = 1e-9


def unit_array(values, name: str = "value") -> np.ndarray:
    """Return ``values`` as a float array of grades in [0, 1].

    Entries within ``SNAP`` of the interval are clamped onto it; anything
    farther out raises :class:`RangeError`.
    """
    arr = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise RangeError(f"{name} contains non-finite entries")
    if arr.size and (arr.min() < -SNAP or arr.max() > 1.0 + SNAP):
        bad = arr[(arr < -SNAP) | (arr > 1.0 + SNAP)].flat[0]
        raise RangeError(f"{name} entry {bad!r} lies outside [0, 1]")
    return np.clip(arr, 0.0, 1.0)


def unit_interval(value: float) -> float:
    """Validate a single membership grade."""
    return float(unit_array(value))


def _scalar_or_array(out):
    return float(out) if np.ndim(out) == 0 else out


def t_norm(x, y):
    """Lukasiewicz t-norm ``max(x + y - 1, 0)``."""
    x = unit_array(x, "x")
    y = unit_array(y, "y")
    return _scalar_or_array(np.maximum(x + y - 1.0, 0.0))


def residuum(a, b):
    """Residual implication of the Lukasiewicz t-norm, ``min(1, b + 1 - a)``.

    This is the largest ``x`` with ``t_norm(a, x) <= b``. The subtraction is
    written as ``b + 1 - a`` so it rounds identically to the unit-candidate
    value used when assembling candidate solutions.
    """
    a = unit_array(a, "a")
    b = unit_array(b, "b")
    return _scalar_or_array(np.minimum(b + 1.0 - a, 1.0))


def compose(A, x) -> np.ndarray:
    """Max-Lukasiewicz composition: ``out[i] = max_j t_norm(A[i, j], x[j])``."""
    A = unit_array(A, "A")
    x = unit_array(x, "x")
    if A.ndim != 2 or x.ndim != 1:
        raise DimensionError("compose expects a matrix and a vector")
    if A.shape[1] != x.shape[0]:
        raise DimensionError(
            f"matrix has {A.shape[1]} columns but vector has length {x.shape[0]}"
        )
    if A.shape[1] == 0:
        return np.zeros(A.shape[0])
    return np.maximum(A + x[None, :] - 1.0, 0.0).max(axis=1)


def dot(c, x) -> float:
    """Correctly rounded dot product.

    ``math.fsum`` makes the result independent of summation order, so any
    two code paths that evaluate the same products agree bit for bit.
    """
    c = np.asarray(c, dtype=float)
    x = np.asarray(x, dtype=float)
    if c.shape != x.shape:
        raise DimensionError(f"dot of shapes {c.shape} and {x.shape}")
    return math.fsum((c * x).tolist())
