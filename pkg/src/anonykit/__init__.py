"""Solvers for single-attribute k-anonymization by generalization.

- :mod:`anonykit.bincover`: unordered labels as Min-Max Bin Covering
- :mod:`anonykit.graphs`: connected regions of a vertex-weighted graph
- :mod:`anonykit.rects`: axis-aligned rectangles over weighted points
- :mod:`anonykit.census`: name-frequency tables and the k sweep
"""

__version__ = "0.1.0"

from .model import BinCoveringInstance, Packing, RelaxedPacking, ValidatedInstance, make_instance, validate_instance

__all__ = [
    "BinCoveringInstance",
    "Packing",
    "RelaxedPacking",
    "ValidatedInstance",
    "make_instance",
    "validate_instance",
]
