"""Approximation schemes for Min-Max Bin Covering built on size rounding.

Large items (size >= epsilon * k) are rounded down onto a geometric ladder
``epsilon * (1 + epsilon) ** l`` (in units of k). A *configuration* is a
multiset of ladder sizes whose rounded total is at most 3k, and a *type*
says how many bins use each configuration, plus how many start empty.
Every type is expanded back into a packing of the real items:

1. rounded items are replaced by original items of the same ladder class;
2. small items are added one at a time to the currently lowest bin;
3. (strict scheme only) the two lowest bins are merged while any is below k.

The cheapest result over all types is returned. All arithmetic is exact:
ladder values are Fractions and are compared against integer sizes.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from ..errors import EnumerationBudgetExceeded
from ..model import Packing, RelaxedPacking, ValidatedInstance, as_validated, relaxed_floor
from .heuristics import fold

DEFAULT_STATE_CAP = 10**7


def _as_epsilon(epsilon) -> Fraction:
    eps = Fraction(epsilon)
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must lie strictly between 0 and 1, got {eps}")
    return eps


@dataclass(frozen=True)
class RoundingLadder:
    epsilon: Fraction
    sizes: tuple[Fraction, ...]  # in units of k, strictly increasing, all < 3

    @classmethod
    def build(cls, epsilon) -> "RoundingLadder":
        eps = _as_epsilon(epsilon)
        sizes = []
        value = eps
        while value < 3:
            sizes.append(value)
            value *= 1 + eps
        return cls(eps, tuple(sizes))

    @property
    def top(self) -> int:
        """Largest ladder exponent N with ``epsilon * (1 + epsilon) ** N < 3``."""
        return len(self.sizes) - 1

    def is_large(self, size: int, k: int) -> bool:
        return size >= self.epsilon * k

    def index(self, size: int, k: int) -> int:
        """Ladder index of the largest rung not exceeding ``size / k``."""
        x = Fraction(size, k)
        if x < self.sizes[0]:
            raise ValueError(f"size {size} is small for k={k} and has no rung")
        lo, hi = 0, len(self.sizes) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.sizes[mid] <= x:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def rounded(self, size: int, k: int) -> Fraction:
        return self.sizes[self.index(size, k)]


# a configuration is a tuple of counts, one per ladder rung
BinConfiguration = tuple


@dataclass(frozen=True)
class PackingType:
    configurations: tuple[tuple[BinConfiguration, int], ...]
    empty_bins: int

    @property
    def bins(self) -> int:
        return sum(c for _, c in self.configurations) + self.empty_bins


def configurations(ladder: RoundingLadder, available: Sequence[int]) -> list[BinConfiguration]:
    """All non-empty configurations using at most ``available[l]`` items of rung ``l``.

    Sorted in decreasing lexicographic order, which keeps configurations
    grouped by their lowest used rung.
    """
    rungs = len(ladder.sizes)
    denom = 1
    for s in ladder.sizes:
        denom = denom * s.denominator // _gcd(denom, s.denominator)
    weights = [int(s * denom) for s in ladder.sizes]
    cap = 3 * denom

    out = []
    counts = [0] * rungs

    def walk(pos: int, room: int) -> None:
        if pos == rungs:
            if any(counts):
                out.append(tuple(counts))
            return
        c = 0
        while c <= available[pos] and c * weights[pos] <= room:
            counts[pos] = c
            walk(pos + 1, room - c * weights[pos])
            c += 1
        counts[pos] = 0

    walk(0, cap)
    out.sort(reverse=True)
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _first_nonzero(vec: Sequence[int]) -> int:
    for i, v in enumerate(vec):
        if v:
            return i
    return len(vec)


def enumerate_types(
    configs: Sequence[BinConfiguration],
    available: Sequence[int],
    max_bins: int,
    max_empty: int,
    state_cap: int = DEFAULT_STATE_CAP,
) -> Iterator[PackingType]:
    """Every type whose configurations use exactly the ``available`` large items.

    Types use at most ``max_bins`` bins; empty bins are limited to
    ``max_empty`` because any beyond the number of small items stay empty.
    Raises EnumerationBudgetExceeded once more than ``state_cap`` search
    states have been visited.
    """
    states = 0
    chosen: list[int] = []
    rungs = len(available)

    def walk(start: int, remaining: list[int], used: int):
        nonlocal states
        states += 1
        if states > state_cap:
            raise EnumerationBudgetExceeded(
                f"type enumeration exceeded {state_cap} states; use a larger epsilon"
            )
        need = _first_nonzero(remaining)
        if need == rungs:
            grouped: dict[int, int] = {}
            for idx in chosen:
                grouped[idx] = grouped.get(idx, 0) + 1
            base = tuple((configs[idx], c) for idx, c in sorted(grouped.items()))
            for empty in range(min(max_bins - used, max_empty) + 1):
                yield PackingType(base, empty)
            return
        if used >= max_bins:
            return
        for idx in range(start, len(configs)):
            conf = configs[idx]
            if _first_nonzero(conf) > need:
                break
            if all(c <= r for c, r in zip(conf, remaining)):
                chosen.append(idx)
                yield from walk(idx, [r - c for r, c in zip(remaining, conf)], used + 1)
                chosen.pop()

    yield from walk(0, list(available), 0)


@dataclass
class _Prepared:
    """Working instance after oversize preprocessing, or a finished packing."""

    work: ValidatedInstance | None
    shift: int = 0
    direct: list[list[int]] | None = None


def _preprocess(inst: ValidatedInstance) -> _Prepared:
    sizes, k = inst.sizes, inst.k
    nominal = [i for i, s in enumerate(sizes) if s < k]
    oversize = [i for i, s in enumerate(sizes) if s >= k]
    nominal_total = sum(sizes[i] for i in nominal)

    if nominal_total >= k:
        if any(sizes[i] >= 3 * k for i in oversize):
            return _Prepared(None, direct=[list(b) for b in fold(inst).bins])
        return _Prepared(inst)

    smallest = min(oversize, key=lambda i: (sizes[i], i))
    t0, t1 = sizes[smallest], max(sizes[i] for i in oversize)
    if t1 - t0 >= k:
        bins = [[smallest] + nominal] + [[i] for i in oversize if i != smallest]
        return _Prepared(None, direct=bins)
    shift = t0 - k
    work_sizes = [s - shift if s >= k else s for s in sizes]
    return _Prepared(ValidatedInstance(work_sizes, k), shift=shift)


def _restore(inst: ValidatedInstance, bins: list[list[int]], shift: int) -> list[list[int]]:
    """Undo the oversize shift, keeping at most one oversize item per bin."""
    if not shift:
        return bins
    k, sizes = inst.k, inst.sizes
    out = []
    for b in bins:
        over = [i for i in b if sizes[i] >= k]
        keep = set(over[1:])
        out.append([i for i in b if i not in keep])
        out.extend([i] for i in over[1:])
    return out


def _complete(
    work: ValidatedInstance,
    ptype: PackingType,
    by_rung: dict[int, list[int]],
    small: list[int],
) -> tuple[list[list[int]], list[int]]:
    """Steps 1 and 2: realize a type with original items, then add small items greedily."""
    sizes = work.sizes
    queues = {rung: list(items) for rung, items in by_rung.items()}
    bins: list[list[int]] = []
    for conf, mult in ptype.configurations:
        for _ in range(mult):
            b = []
            for rung, count in enumerate(conf):
                for _ in range(count):
                    b.append(queues[rung].pop(0))
            bins.append(b)
    bins.extend([] for _ in range(ptype.empty_bins))
    levels = [sum(sizes[i] for i in b) for b in bins]

    heap = [(lv, j) for j, lv in enumerate(levels)]
    heapq.heapify(heap)
    for i in small:
        lv, j = heapq.heappop(heap)
        bins[j].append(i)
        levels[j] = lv + sizes[i]
        heapq.heappush(heap, (levels[j], j))
    keep = [j for j, b in enumerate(bins) if b]
    return [bins[j] for j in keep], [levels[j] for j in keep]


def _merge_until(bins: list[list[int]], levels: list[int], threshold: int) -> tuple[list[list[int]], list[int]]:
    """Step 3: merge the two lowest bins while any bin is below ``threshold``."""
    bins = [list(b) for b in bins]
    heap = [(lv, j) for j, lv in enumerate(levels)]
    heapq.heapify(heap)
    alive = {j: lv for j, lv in enumerate(levels)}
    while len(heap) > 1 and heap[0][0] < threshold:
        la, a = heapq.heappop(heap)
        lb, b = heapq.heappop(heap)
        keep, drop = min(a, b), max(a, b)
        bins[keep].extend(bins[drop])
        bins[drop] = []
        del alive[drop]
        alive[keep] = la + lb
        heapq.heappush(heap, (la + lb, keep))
    order = sorted(alive)
    return [bins[j] for j in order], [alive[j] for j in order]


def _search(work: ValidatedInstance, eps: Fraction, relaxed: bool, state_cap: int) -> list[list[int]]:
    sizes, k = work.sizes, work.k
    ladder = RoundingLadder.build(eps)
    large = [i for i in range(work.n) if ladder.is_large(sizes[i], k)]
    small = sorted((i for i in range(work.n) if not ladder.is_large(sizes[i], k)), key=lambda i: (-sizes[i], i))
    ladder_index = {i: ladder.index(sizes[i], k) for i in large}

    available = [0] * len(ladder.sizes)
    by_rung: dict[int, list[int]] = {}
    for i in sorted(large, key=lambda i: (-sizes[i], i)):
        available[ladder_index[i]] += 1
        by_rung.setdefault(ladder_index[i], []).append(i)

    floor = relaxed_floor(k, eps) if relaxed else k
    max_bins = work.total // floor
    configs = configurations(ladder, available)

    best: tuple[int, list[list[int]]] | None = None
    fallback: tuple[int, list[list[int]]] | None = None
    for ptype in enumerate_types(configs, available, max_bins, len(small), state_cap):
        if ptype.bins == 0:
            continue
        bins, levels = _complete(work, ptype, by_rung, small)
        if not bins:
            continue
        if best is not None and max(levels) >= best[0]:
            continue
        if relaxed:
            if min(levels) >= floor:
                best = (max(levels), bins)
            elif best is None:
                merged, mlevels = _merge_until(bins, levels, floor)
                if fallback is None or max(mlevels) < fallback[0]:
                    fallback = (max(mlevels), merged)
        else:
            merged, mlevels = _merge_until(bins, levels, k)
            if best is None or max(mlevels) < best[0]:
                best = (max(mlevels), merged)

    if best is None:
        best = fallback
    if best is None:
        # no type realizes the large items within the level-3 bound
        return [list(range(work.n))]
    return best[1]


def approx_two_eps(inst, epsilon, state_cap: int = DEFAULT_STATE_CAP) -> Packing:
    """Feasible packing with cost at most ``(1 + epsilon) * (Opt + k)``.

    Runtime is polynomial in n for fixed epsilon, with a very high degree as
    epsilon shrinks; ``state_cap`` bounds the type search.
    """
    inst = as_validated(inst)
    eps = _as_epsilon(epsilon)
    prep = _preprocess(inst)
    if prep.direct is not None:
        return Packing(inst, prep.direct)
    bins = _search(prep.work, eps, relaxed=False, state_cap=state_cap)
    return Packing(inst, _restore(inst, bins, prep.shift))


def relaxed_one_eps(inst, epsilon, state_cap: int = DEFAULT_STATE_CAP) -> RelaxedPacking:
    """Like :func:`approx_two_eps` without the merge step.

    Bins need only reach ``ceil((1 - epsilon) * k)``; in exchange the cost
    stays close to the exact optimum. Types whose completion leaves a bin
    below that floor are discarded; if every type does, the lowest bins of
    the best completion are merged up to the floor.
    """
    inst = as_validated(inst)
    eps = _as_epsilon(epsilon)
    prep = _preprocess(inst)
    if prep.direct is not None:
        return RelaxedPacking(inst, prep.direct, eps)
    bins = _search(prep.work, eps, relaxed=True, state_cap=state_cap)
    return RelaxedPacking(inst, _restore(inst, bins, prep.shift), eps)
