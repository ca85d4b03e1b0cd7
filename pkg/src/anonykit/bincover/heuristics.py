"""Greedy Min-Max Bin Covering heuristics: Fold, Spread and the sweep variant of Spread."""

from __future__ import annotations

from typing import Sequence

from ..model import Packing, ValidatedInstance, as_validated
from .exact import exact_min_max
from .splits import split_two, three_way_item_split

SPREAD_EXACT_LIMIT = 16


def _check_order(order, n: int) -> list[int]:
    if order is None:
        return list(range(n))
    order = [int(i) for i in order]
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the item indices")
    return order


def _next_fit(items: Sequence[int], sizes: Sequence[int], k: int) -> tuple[list[list[int]], list[int]]:
    """Fill bins in sequence, closing each once it reaches k.

    Returns the closed bins and the trailing open bin (possibly empty).
    """
    closed, current, level = [], [], 0
    for i in items:
        current.append(i)
        level += sizes[i]
        if level >= k:
            closed.append(current)
            current, level = [], 0
    return closed, current


def fold(inst, order: Sequence[int] | None = None) -> Packing:
    """Next-Fit covering with oversize items set aside.

    Items of size >= k get singleton bins. The rest are scanned in ``order``
    with Next Fit; an underfull trailing bin is merged into the last closed
    bin, or into the smallest oversize bin when Next Fit closed nothing.
    Cost is at most ``max(k - 1 + max size, 3k - 3)``.
    """
    inst = as_validated(inst)
    sizes, k = inst.sizes, inst.k
    order = _check_order(order, inst.n)

    oversize = [[i] for i in order if sizes[i] >= k]
    closed, leftover = _next_fit([i for i in order if sizes[i] < k], sizes, k)
    if leftover:
        if closed:
            closed[-1].extend(leftover)
        else:
            target = min(oversize, key=lambda b: (sizes[b[0]], oversize.index(b)))
            target.extend(leftover)
    return Packing(inst, oversize + closed)


def _level(bin_, sizes) -> int:
    return sum(sizes[i] for i in bin_)


def _repairs_few_bins(bins: list[list[int]], sizes, k: int) -> list[list[list[int]]]:
    """Candidate repairs when greedy leaves an underfull last bin and few closed bins."""
    closed, last = bins[:-1], bins[-1]
    candidates = []
    for j in range(len(closed)):
        cand = [list(b) for b in closed]
        cand[j].extend(last)
        candidates.append(cand)
    if len(closed) >= 2:
        # spread the leftover over the lowest closed bins
        order = sorted(range(len(closed)), key=lambda j: (_level(closed[j], sizes), j))
        if len(closed) >= 3:
            parts = three_way_item_split(last, sizes)
        else:
            ordered = sorted(last, key=lambda i: (-sizes[i], i))
            a, _ = split_two([sizes[i] for i in ordered], max(sizes[i] for i in ordered))
            parts = (ordered[: len(a)], ordered[len(a):])
        cand = [list(b) for b in closed]
        for j, part in zip(order, parts):
            cand[j].extend(part)
        candidates.append(cand)
    return candidates


def _greedy_decreasing(inst: ValidatedInstance) -> list[list[int]]:
    sizes, k = inst.sizes, inst.k
    ordered = sorted(range(inst.n), key=lambda i: (-sizes[i], i))
    closed, leftover = _next_fit(ordered, sizes, k)
    return closed + ([leftover] if leftover else [])


def _spread_repair(inst: ValidatedInstance, bins: list[list[int]]) -> list[list[int]] | None:
    """Case analysis for an underfull last bin when greedy formed at least four bins.

    Returns None when the case calls for the Fold fallback.
    """
    sizes, k = inst.sizes, inst.k
    closed, last = [list(b) for b in bins[:-1]], bins[-1]
    f_item = min(last, key=lambda i: (-sizes[i], i))
    f = sizes[f_item]
    r = _level(last, sizes) - f

    if 2 * f <= k:
        # every leftover item is small: three parts of at most k/2 each
        for j, part in enumerate(three_way_item_split(last, sizes)):
            closed[j].extend(part)
        return closed

    large = [i for b in bins for i in b if k < 2 * sizes[i] and sizes[i] < k]
    x1 = min(large, key=lambda i: (-sizes[i], i))
    if x1 in last:
        # an oversize item must exist; fold the leftover into the smallest one
        over = [j for j, b in enumerate(closed) if any(sizes[i] >= k for i in b)]
        if not over:
            return None
        j = min(over, key=lambda j: (_level(closed[j], sizes), j))
        closed[j].extend(last)
        return closed

    if sizes[x1] + r >= k:
        j = next(j for j, b in enumerate(closed) if x1 in b)
        closed[j] = [f_item if i == x1 else i for i in closed[j]]
        new_last = [x1 if i == f_item else i for i in last]
        return closed + [new_last]
    return None


def spread(inst) -> Packing:
    """Greedy decreasing covering with leftover repair; cost within 5/2 of optimal.

    Items are packed in decreasing size into successive bins, each closed at
    level k. An underfull last bin is repaired by the case analysis of
    :func:`_spread_repair`; with three or fewer greedy bins the exact solver
    runs instead (up to ``SPREAD_EXACT_LIMIT`` items). Fold's packing is
    always a candidate and the cheapest feasible candidate wins.
    """
    inst = as_validated(inst)
    sizes, k = inst.sizes, inst.k
    bins = _greedy_decreasing(inst)

    candidates: list[Packing] = []
    if _level(bins[-1], sizes) >= k:
        candidates.append(Packing(inst, bins))
    elif len(bins) <= 3:
        if inst.n <= SPREAD_EXACT_LIMIT:
            candidates.append(exact_min_max(inst)[1])
        else:
            candidates.extend(Packing(inst, c) for c in _repairs_few_bins(bins, sizes, k))
    else:
        repaired = _spread_repair(inst, bins)
        if repaired is not None:
            candidates.append(Packing(inst, repaired))
    candidates.append(fold(inst))

    feasible = [p for p in candidates if p.feasible]
    return min(feasible, key=lambda p: p.cost)


def spread_experimental(inst, order: Sequence[int] | None = None) -> Packing:
    """Next Fit in ``order``, then leftover items are spread over the closed bins.

    Each leftover item goes to the lowest bin while that keeps the maximum
    level unchanged; from the first item that would raise the maximum on,
    the remaining items are dealt round-robin starting at bin 0.
    """
    inst = as_validated(inst)
    sizes, k = inst.sizes, inst.k
    order = _check_order(order, inst.n)
    closed, leftover = _next_fit(order, sizes, k)
    levels = [_level(b, sizes) for b in closed]

    pos = 0
    while pos < len(leftover):
        i = leftover[pos]
        j = min(range(len(closed)), key=lambda j: (levels[j], j))
        if levels[j] + sizes[i] > max(levels):
            break
        closed[j].append(i)
        levels[j] += sizes[i]
        pos += 1
    for turn, i in enumerate(leftover[pos:]):
        j = turn % len(closed)
        closed[j].append(i)
        levels[j] += sizes[i]
    return Packing(inst, closed)
