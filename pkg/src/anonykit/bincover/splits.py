"""Balanced prefix cuts used by the leftover repair in :func:`spread`."""

from __future__ import annotations

from typing import Sequence

from ..errors import BoundViolated, PreconditionViolated


def split_two(values: Sequence[int], m: int) -> tuple[list[int], list[int]]:
    """Cut ``values`` into a prefix and suffix, each summing to at most ``(s + m) / 2``.

    ``m`` must bound every value. Partial sums move by at most ``m`` per step,
    so some prefix sum lands in ``[(s - m) / 2, (s + m) / 2]``. The cut taken
    is the one whose prefix sum is closest to ``s / 2`` (later cut on ties),
    which always lies in that window.
    """
    values = list(values)
    for v in values:
        if v > m:
            raise BoundViolated(f"value {v} exceeds bound m={m}")
    s = sum(values)
    best_cut, best_gap = 0, abs(s)
    prefix = 0
    for cut, v in enumerate(values, 1):
        prefix += v
        gap = abs(2 * prefix - s)
        if gap <= best_gap:
            best_cut, best_gap = cut, gap
    return values[:best_cut], values[best_cut:]


def _three_parts(values: Sequence[int]) -> tuple[list[int], list[int], list[int]]:
    ordered = sorted(values, reverse=True)
    if not ordered:
        return [], [], []
    head, rest = ordered[0], ordered[1:]
    b, c = split_two(rest, head)
    return [head], b, c


def split_three(values: Sequence[int], total: int) -> tuple[list[int], list[int], list[int]]:
    """Partition into three parts, each summing to at most ``total / 2``.

    Requires ``sum(values) == total`` and ``2 * v <= total`` for every value.
    The largest value forms the first part; the rest is cut with
    :func:`split_two` bounded by that largest value. Parts may be empty.
    """
    values = list(values)
    if sum(values) != total:
        raise PreconditionViolated(f"values sum to {sum(values)}, expected {total}")
    for v in values:
        if 2 * v > total:
            raise PreconditionViolated(f"value {v} exceeds half of total {total}")
    return _three_parts(values)


def three_way_item_split(items: Sequence[int], sizes: Sequence[int]) -> tuple[list[int], list[int], list[int]]:
    """Same construction as :func:`split_three` but over item indices.

    No precondition on the total: each of the last two parts sums to at most
    half the total of ``items`` and the first holds the single largest item.
    """
    ordered = sorted(items, key=lambda i: (-sizes[i], i))
    if not ordered:
        return [], [], []
    head, rest = ordered[0], ordered[1:]
    rest_sizes = [sizes[i] for i in rest]
    b, _ = split_two(rest_sizes, sizes[head])
    cut = len(b)
    return [head], rest[:cut], rest[cut:]
