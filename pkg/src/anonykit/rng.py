"""Seeded shuffling that is reproducible across platforms and languages.

Algorithm identifier: ``splitmix64-fisher-yates``. The generator is
SplitMix64 (Steele, Lea & Flood 2014); bounded draws use rejection
sampling on the top of the 64-bit range, and the shuffle is the
descending Fisher-Yates loop ``for i in n-1..1: swap(i, draw(i + 1))``.
"""

from __future__ import annotations

ALGORITHM = "splitmix64-fisher-yates"
_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound


def shuffled(n: int, seed: int) -> list[int]:
    order = list(range(n))
    rng = SplitMix64(seed)
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        order[i], order[j] = order[j], order[i]
    return order
