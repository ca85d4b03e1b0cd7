"""Exact Min-Max Bin Covering by dynamic programming over item subsets."""

from __future__ import annotations

from ..errors import TooLarge
from ..model import Packing, as_validated

MAX_EXACT_ITEMS = 20


def exact_min_max(inst, max_items: int = MAX_EXACT_ITEMS) -> tuple[int, Packing]:
    """Return ``(optimal cost, optimal packing)``.

    ``best[mask]`` is the cheapest way to cover exactly the items of ``mask``
    with bins of level >= k. The bin holding the lowest item of ``mask`` is
    chosen explicitly, so each partition is visited once: about ``3**n / 2``
    steps in total.
    """
    inst = as_validated(inst)
    n, k, sizes = inst.n, inst.k, inst.sizes
    if n > max_items:
        raise TooLarge(f"exact search limited to {max_items} items, got {n}")

    size_of = 1 << n
    level = [0] * size_of
    for m in range(1, size_of):
        low = m & -m
        level[m] = level[m ^ low] + sizes[low.bit_length() - 1]

    inf = float("inf")
    best = [inf] * size_of
    choice = [0] * size_of
    best[0] = 0
    for m in range(1, size_of):
        if level[m] < k:
            continue
        low = m & -m
        rest = m ^ low
        cur, cur_sub = level[m], m
        sub = rest
        while True:
            s = sub | low
            ls = level[s]
            if k <= ls < cur:
                other = best[m ^ s]
                if other < cur:
                    c = ls if ls > other else other
                    if c < cur:
                        cur, cur_sub = c, s
            if not sub:
                break
            sub = (sub - 1) & rest
        best[m] = cur
        choice[m] = cur_sub

    full = size_of - 1
    bins = []
    m = full
    while m:
        s = choice[m]
        bins.append([i for i in range(n) if s >> i & 1])
        m ^= s
    return int(best[full]), Packing(inst, bins)
