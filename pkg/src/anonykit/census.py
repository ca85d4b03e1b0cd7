"""Name-frequency tables and the Fold/Spread k sweep.

Input files follow the 1990 census name lists: whitespace-separated rows
``NAME FREQ CUMFREQ RANK`` with FREQ a percentage. Percentages are scaled
to integer counts (x1000 by default, exact for three decimals).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .bincover import fold, spread_experimental
from .errors import DegenerateRange, EmptyFile, InfeasibleK, NonIntegralFrequency, ParseError
from .model import make_instance
from .rng import ALGORITHM, shuffled

DEFAULT_SCALE = 1000
INTEGRALITY_TOLERANCE = Decimal("1e-6")

VARIANTS = {
    "random-fold": ("fold", "random"),
    "random-spread": ("spread", "random"),
    "sorted-fold": ("fold", "sorted"),
    "sorted-spread": ("spread", "sorted"),
}


@dataclass(frozen=True)
class FrequencyTable:
    labels: tuple[str, ...]
    counts: tuple[int, ...]
    scale: int = DEFAULT_SCALE
    source: str = ""

    def __post_init__(self):
        if len(self.labels) != len(self.counts):
            raise ValueError("labels and counts differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be unique")
        if any(c < 1 for c in self.counts):
            raise ValueError("counts must be >= 1")

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def provenance(self) -> str:
        return f"{self.source or '<memory>'}: FREQ percentages x{self.scale}"


def parse_frequency_lines(lines: Iterable[str], scale: int = DEFAULT_SCALE, source: str = "") -> FrequencyTable:
    labels, counts = [], []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 4:
            raise ParseError(f"{source}:{lineno}: expected NAME FREQ CUMFREQ RANK, got {len(fields)} fields")
        name, freq = fields[0], fields[1]
        try:
            value = Decimal(freq) * scale
        except InvalidOperation:
            raise ParseError(f"{source}:{lineno}: frequency {freq!r} is not a number") from None
        count = int(value.to_integral_value())
        if abs(value - count) > INTEGRALITY_TOLERANCE:
            raise NonIntegralFrequency(f"{source}:{lineno}: {freq} x {scale} = {value} is not an integer")
        if count < 1:
            raise ParseError(f"{source}:{lineno}: frequency {freq} scales to {count}")
        labels.append(name)
        counts.append(count)
    if not labels:
        raise EmptyFile(f"{source or 'input'} contains no rows")
    return FrequencyTable(tuple(labels), tuple(counts), scale, source)


def load_frequency_table(path, scale: int = DEFAULT_SCALE) -> FrequencyTable:
    path = Path(path)
    with path.open() as fh:
        return parse_frequency_lines(fh, scale, str(path))


def default_k_grid(table: FrequencyTable, samples: int = 200, spacing: str = "log") -> list[int]:
    """k values from the largest count up to ``total // 2`` (two classes left).

    Log-spaced by default; endpoints are always included and duplicates
    dropped.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    lo, hi = max(table.counts), table.total // 2
    if hi <= lo:
        if hi < lo:
            warnings.warn(
                f"total {table.total} is below twice the largest count {lo}; sweeping k={lo} only",
                DegenerateRange,
                stacklevel=2,
            )
        return [lo]
    if samples == 1:
        return [lo]
    grid = []
    for t in range(samples):
        if spacing == "log":
            value = lo * (hi / lo) ** (t / (samples - 1))
        else:
            value = lo + (hi - lo) * t / (samples - 1)
        grid.append(int(math.floor(value + 0.5)))
    grid[0], grid[-1] = lo, hi
    return sorted(set(min(max(g, lo), hi) for g in grid))


@dataclass(frozen=True)
class SweepRow:
    k: int
    algorithm: str
    order: str
    seed: int
    cost: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.cost, self.k)

    @property
    def variant(self) -> str:
        return f"{self.order}-{self.algorithm}"


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...]
    shuffle: str = ALGORITHM

    def variants(self) -> list[str]:
        return sorted({r.variant for r in self.rows})

    def series(self, variant: str) -> list[SweepRow]:
        return [r for r in self.rows if r.variant == variant]


def _solve(algorithm: str, sizes: Sequence[int], k: int, order: list[int]) -> int:
    inst = make_instance(sizes, k)
    if algorithm == "fold":
        return fold(inst, order).cost
    return spread_experimental(inst, order).cost


def run_sweep(
    table: FrequencyTable,
    algorithms: Sequence[str] = tuple(VARIANTS),
    k_grid: Sequence[int] | None = None,
    seed: int = 0,
) -> SweepReport:
    """Run every variant at every k; rows are ordered by (k, variant name).

    Random variants all share one seeded shuffle of the table; sorted
    variants scan labels by decreasing count (ties by table position).
    """
    if not table.counts:
        raise EmptyFile("frequency table is empty")
    unknown = [a for a in algorithms if a not in VARIANTS]
    if unknown:
        raise ValueError(f"unknown variants {unknown}; choose from {sorted(VARIANTS)}")
    grid = list(default_k_grid(table) if k_grid is None else k_grid)
    for k in grid:
        if k > table.total:
            raise InfeasibleK(f"k={k} exceeds the total count {table.total}")
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
    counts = table.counts
    orders = {
        "random": shuffled(len(counts), seed),
        "sorted": sorted(range(len(counts)), key=lambda i: (-counts[i], i)),
    }
    rows = []
    for k in sorted(set(grid)):
        for name in sorted(set(algorithms)):
            algorithm, mode = VARIANTS[name]
            rows.append(SweepRow(k, algorithm, mode, seed, _solve(algorithm, counts, k, orders[mode])))
    return SweepReport(tuple(rows))
