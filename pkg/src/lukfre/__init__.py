"""Linear optimization subject to max-Lukasiewicz fuzzy relation equations."""

__version__ = "0.1.0"

from .algebra import compose, residuum, t_norm
from .instance import Instance, generate_random, load_instance, parse_instance, serialize_instance
from .solver import SolveReport, SolverConfig, solve

__all__ = [
    "Instance",
    "SolveReport",
    "SolverConfig",
    "compose",
    "generate_random",
    "load_instance",
    "parse_instance",
    "residuum",
    "serialize_instance",
    "solve",
    "t_norm",
]
