"""Rectangular k-anonymous partitions of weighted planar point sets.

Rectangles are half-open ``[x_lo, x_hi) x [y_lo, y_hi)`` on integer
coordinates. A cut between two adjacent distinct point coordinates
``a < b`` is placed at ``a + 1``, so no point ever lies on a cut line.
"""

from __future__ import annotations

import warnings
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import InfeasibleTotal, InvalidInstance, TooLarge

INT64_MIN, INT64_MAX = -(2**63), 2**63 - 1


@dataclass(frozen=True)
class WeightedPointSet:
    points: tuple[tuple[int, int, int], ...]  # (x, y, multiplicity), sorted by (x, y)

    def __init__(self, points: Iterable[Sequence[int]]):
        merged: dict[tuple[int, int], int] = {}
        duplicates = False
        for x, y, w in points:
            x, y, w = int(x), int(y), int(w)
            if w < 1:
                raise InvalidInstance(f"point ({x}, {y}) has multiplicity {w}; must be >= 1")
            if not (INT64_MIN <= x <= INT64_MAX - 1 and INT64_MIN <= y <= INT64_MAX - 1):
                raise InvalidInstance(f"point ({x}, {y}) is outside the 64-bit coordinate range")
            if (x, y) in merged:
                duplicates = True
            merged[(x, y)] = merged.get((x, y), 0) + w
        if not merged:
            raise InvalidInstance("point set is empty")
        if duplicates:
            warnings.warn("duplicate coordinates merged by summing multiplicities", stacklevel=2)
        object.__setattr__(self, "points", tuple((x, y, w) for (x, y), w in sorted(merged.items())))

    @property
    def total(self) -> int:
        return sum(w for _, _, w in self.points)


@dataclass(frozen=True)
class Rect:
    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int

    @property
    def area(self) -> int:
        return (self.x_hi - self.x_lo) * (self.y_hi - self.y_lo)

    def contains(self, x: int, y: int) -> bool:
        return self.x_lo <= x < self.x_hi and self.y_lo <= y < self.y_hi

    def overlaps(self, other: "Rect") -> bool:
        return (
            self.x_lo < other.x_hi and other.x_lo < self.x_hi and self.y_lo < other.y_hi and other.y_lo < self.y_hi
        )


@dataclass(frozen=True)
class RectTree:
    rect: Rect
    weight: int
    axis: str | None = None  # "x" or "y" on internal nodes
    cut: int | None = None
    low: "RectTree | None" = None
    high: "RectTree | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.low is None

    def leaves(self) -> Iterator["RectTree"]:
        stack = [self]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                yield node
            else:
                stack.append(node.high)
                stack.append(node.low)

    @property
    def cost(self) -> int:
        return max(leaf.weight for leaf in self.leaves())


def _root_rect(points: WeightedPointSet) -> Rect:
    xs = [p[0] for p in points.points]
    ys = [p[1] for p in points.points]
    return Rect(min(xs), max(xs) + 1, min(ys), max(ys) + 1)


def candidate_cuts(pts: Sequence[tuple[int, int, int]]) -> list[tuple[str, int, int, int]]:
    """All cuts of a point group as ``(axis, coordinate, low weight, high weight)``."""
    total = sum(w for _, _, w in pts)
    out = []
    for axis, pos in (("x", 0), ("y", 1)):
        by_coord: dict[int, int] = {}
        for p in pts:
            by_coord[p[pos]] = by_coord.get(p[pos], 0) + p[2]
        coords = sorted(by_coord)
        low = 0
        for a in coords[:-1]:
            low += by_coord[a]
            out.append((axis, a + 1, low, total - low))
    return out


def _split_rect(rect: Rect, axis: str, cut: int) -> tuple[Rect, Rect]:
    if axis == "x":
        return Rect(rect.x_lo, cut, rect.y_lo, rect.y_hi), Rect(cut, rect.x_hi, rect.y_lo, rect.y_hi)
    return Rect(rect.x_lo, rect.x_hi, rect.y_lo, cut), Rect(rect.x_lo, rect.x_hi, cut, rect.y_hi)


def kd_partition(points: WeightedPointSet, k: int) -> RectTree:
    """kd-tree partition: cut while some axis-aligned line leaves >= k on both sides.

    Among feasible cuts the one with the lightest heavier side is taken;
    ties prefer x cuts, then the lower coordinate.
    """
    if points.total < k:
        raise InfeasibleTotal(f"total weight {points.total} is below k={k}")

    def build(rect: Rect, pts: list[tuple[int, int, int]]) -> RectTree:
        weight = sum(w for _, _, w in pts)
        best = None
        for axis, coord, lo, hi in candidate_cuts(pts):
            if lo >= k and hi >= k:
                key = (max(lo, hi), axis, coord)
                if best is None or key < best:
                    best = key
        if best is None:
            return RectTree(rect, weight)
        _, axis, coord = best
        low_rect, high_rect = _split_rect(rect, axis, coord)
        pos = 0 if axis == "x" else 1
        low_pts = [p for p in pts if p[pos] < coord]
        high_pts = [p for p in pts if p[pos] >= coord]
        return RectTree(rect, weight, axis, coord, build(low_rect, low_pts), build(high_rect, high_pts))

    return build(_root_rect(points), list(points.points))


MAX_ORACLE_COORDS = 12


def guillotine_optimal(points: WeightedPointSet, k: int, max_coords: int = MAX_ORACLE_COORDS) -> tuple[int, RectTree]:
    """Best min-max guillotine partition with every leaf weighing >= k.

    Memoized over sub-rectangles of the compressed coordinate grid, given as
    index ranges ``[i, j) x [a, b)``; each is either kept whole or split by
    one full cut.
    """
    if points.total < k:
        raise InfeasibleTotal(f"total weight {points.total} is below k={k}")
    xs = sorted({p[0] for p in points.points})
    ys = sorted({p[1] for p in points.points})
    if len(xs) > max_coords or len(ys) > max_coords:
        raise TooLarge(f"oracle limited to {max_coords} distinct coordinates per axis")
    nx, ny = len(xs), len(ys)
    grid = [[0] * (ny + 1) for _ in range(nx + 1)]
    for x, y, w in points.points:
        grid[bisect_left(xs, x) + 1][bisect_left(ys, y) + 1] += w
    for i in range(1, nx + 1):
        for j in range(1, ny + 1):
            grid[i][j] += grid[i - 1][j] + grid[i][j - 1] - grid[i - 1][j - 1]

    def weight(i, j, a, b):
        return grid[j][b] - grid[i][b] - grid[j][a] + grid[i][a]

    inf = float("inf")

    @lru_cache(maxsize=None)
    def best(i, j, a, b):
        w = weight(i, j, a, b)
        if w < k:
            return inf, None
        value, how = w, None
        for c in range(i + 1, j):
            left = best(i, c, a, b)[0]
            if left >= value:
                continue
            right = best(c, j, a, b)[0]
            cand = max(left, right)
            if cand < value:
                value, how = cand, ("x", c)
        for c in range(a + 1, b):
            low = best(i, j, a, c)[0]
            if low >= value:
                continue
            high = best(i, j, c, b)[0]
            cand = max(low, high)
            if cand < value:
                value, how = cand, ("y", c)
        return value, how

    root = _root_rect(points)

    def rebuild(i, j, a, b, rect: Rect) -> RectTree:
        w = weight(i, j, a, b)
        how = best(i, j, a, b)[1]
        if how is None:
            return RectTree(rect, w)
        axis, c = how
        coord = (xs if axis == "x" else ys)[c - 1] + 1
        low_rect, high_rect = _split_rect(rect, axis, coord)
        if axis == "x":
            low, high = rebuild(i, c, a, b, low_rect), rebuild(c, j, a, b, high_rect)
        else:
            low, high = rebuild(i, j, a, c, low_rect), rebuild(i, j, c, b, high_rect)
        return RectTree(rect, w, axis, coord, low, high)

    value = best(0, nx, 0, ny)[0]
    tree = rebuild(0, nx, 0, ny, root)
    best.cache_clear()
    return int(value), tree
