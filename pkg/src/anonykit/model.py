"""Problem instances and packings for Min-Max Bin Covering.

Items are identified by zero-based indices into ``sizes``; equal sizes are
still distinct items. Everything here is immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptyInstance, InfeasibleTotal, NonPositiveSize


@dataclass(frozen=True)
class BinCoveringInstance:
    sizes: tuple[int, ...]
    k: int

    def __init__(self, sizes: Iterable[int], k: int):
        object.__setattr__(self, "sizes", tuple(int(s) for s in sizes))
        object.__setattr__(self, "k", int(k))

    @property
    def n(self) -> int:
        return len(self.sizes)


@dataclass(frozen=True)
class ValidatedInstance(BinCoveringInstance):
    """An instance known to satisfy ``sizes >= 1``, ``k >= 1``, ``sum >= k``."""

    total: int = field(init=False)
    kappa: int = field(init=False)

    def __init__(self, sizes: Iterable[int], k: int):
        super().__init__(sizes, k)
        object.__setattr__(self, "total", sum(self.sizes))
        object.__setattr__(self, "kappa", max(self.k, max(self.sizes)))


def validate_instance(inst: BinCoveringInstance) -> ValidatedInstance:
    if isinstance(inst, ValidatedInstance):
        return inst
    if not inst.sizes:
        raise EmptyInstance("instance has no items")
    bad = [i for i, s in enumerate(inst.sizes) if s < 1]
    if bad:
        raise NonPositiveSize(f"item {bad[0]} has size {inst.sizes[bad[0]]}; sizes must be >= 1")
    if inst.k < 1:
        raise NonPositiveSize(f"k must be >= 1, got {inst.k}")
    total = sum(inst.sizes)
    if total < inst.k:
        raise InfeasibleTotal(f"total size {total} is below k={inst.k}")
    return ValidatedInstance(inst.sizes, inst.k)


def make_instance(sizes: Iterable[int], k: int) -> ValidatedInstance:
    return validate_instance(BinCoveringInstance(sizes, k))


def as_validated(inst) -> ValidatedInstance:
    if isinstance(inst, ValidatedInstance):
        return inst
    return validate_instance(inst)


def kappa(inst: BinCoveringInstance) -> int:
    """Lower bound on the cost of any feasible packing."""
    return max(inst.k, max(inst.sizes))


def _canonical_bins(bins: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(int(i) for i in b)) for b in bins)


@dataclass(frozen=True)
class Packing:
    """A partition of all item indices into non-empty bins."""

    instance: BinCoveringInstance
    bins: tuple[tuple[int, ...], ...]

    def __init__(self, instance: BinCoveringInstance, bins: Iterable[Iterable[int]]):
        object.__setattr__(self, "instance", instance)
        object.__setattr__(self, "bins", _canonical_bins(bins))
        check_partition(self.bins, instance.n)

    @property
    def levels(self) -> tuple[int, ...]:
        sizes = self.instance.sizes
        return tuple(sum(sizes[i] for i in b) for b in self.bins)

    @property
    def cost(self) -> int:
        return packing_cost(self)

    @property
    def feasible(self) -> bool:
        return all(level >= self.instance.k for level in self.levels)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.cost, self.instance.k)

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        """Bin list in sorted order; equal for packings that differ only in bin order."""
        return tuple(sorted(self.bins))


@dataclass(frozen=True)
class RelaxedPacking(Packing):
    """Packing whose bins need only reach ``ceil((1 - epsilon) * k)``."""

    epsilon: Fraction = Fraction(0)

    def __init__(self, instance, bins, epsilon):
        super().__init__(instance, bins)
        object.__setattr__(self, "epsilon", Fraction(epsilon))

    @property
    def floor_level(self) -> int:
        return relaxed_floor(self.instance.k, self.epsilon)

    @property
    def relaxed_feasible(self) -> bool:
        return all(level >= self.floor_level for level in self.levels)


def relaxed_floor(k: int, epsilon) -> int:
    bound = (1 - Fraction(epsilon)) * k
    return -((-bound.numerator) // bound.denominator)


def check_partition(bins: Sequence[Sequence[int]], n: int) -> None:
    seen = set()
    for b in bins:
        if not b:
            raise ValueError("packing contains an empty bin")
        for i in b:
            if i < 0 or i >= n:
                raise ValueError(f"item index {i} out of range for n={n}")
            if i in seen:
                raise ValueError(f"item {i} appears in more than one bin")
            seen.add(i)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise ValueError(f"items {missing} are not packed")


def packing_cost(p: Packing) -> int:
    return max(p.levels)
