"""Min-Max Bin Covering: heuristics, approximation schemes and an exact oracle."""

from .exact import exact_min_max
from .heuristics import fold, spread, spread_experimental
from .ptas import (
    PackingType,
    RoundingLadder,
    approx_two_eps,
    configurations,
    enumerate_types,
    relaxed_one_eps,
)
from .splits import split_three, split_two

__all__ = [
    "PackingType",
    "RoundingLadder",
    "approx_two_eps",
    "configurations",
    "enumerate_types",
    "exact_min_max",
    "fold",
    "relaxed_one_eps",
    "split_three",
    "split_two",
    "spread",
    "spread_experimental",
]
