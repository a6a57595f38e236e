"""Deterministic seeded matrix entries for the randomized identity checks.

The generator is part of the external interface so that golden outputs are
portable: a 64-bit linear congruential generator with

    state_0   = seed mod 2^64
    state_t+1 = (6364136223846793005 * state_t + 1442695040888963407) mod 2^64

and each draw takes the top 31 bits, value = (state_t+1 >> 33) mod span.
Matrix entries are drawn row-major.
"""

from __future__ import annotations

__all__ = ["Lcg", "integer_matrix"]

_MULTIPLIER = 6364136223846793005
_INCREMENT = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    """The documented 64-bit LCG; draws are reproducible by construction."""

    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError("seed must be non-negative")
        self.state = seed & _MASK

    def below(self, span: int) -> int:
        """Next value in [0, span)."""
        self.state = (_MULTIPLIER * self.state + _INCREMENT) & _MASK
        return (self.state >> 33) % span


def integer_matrix(n: int, seed: int, lo: int, hi: int) -> list[list[int]]:
    """n x n matrix with entries drawn uniformly-ish from [lo, hi], row-major."""
    if hi < lo:
        raise ValueError("empty entry range")
    gen = Lcg(seed)
    span = hi - lo + 1
    return [[lo + gen.below(span) for _ in range(n)] for _ in range(n)]
