"""Portable seeded RNG so generated instances are reproducible in any language.

64-bit LCG ``state = state * 6364136223846793005 + 1442695040888963407 (mod 2**64)``
(Knuth's MMIX constants). Each draw advances the state once and returns
its high 32 bits. The initial state is the seed reduced mod 2**64.
"""

from __future__ import annotations

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK64 = (1 << 64) - 1


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u32(self) -> int:
        self.state = (self.state * MULTIPLIER + INCREMENT) & MASK64
        return self.state >> 32

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection sampling."""
        if not 0 < bound <= 1 << 32:
            raise ValueError("bound must be in 1..2**32")
        limit = ((1 << 32) // bound) * bound
        while True:
            x = self.next_u32()
            if x < limit:
                return x % bound

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
