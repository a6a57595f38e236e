"""Sign-pattern expansions of graceful labelings.

Every gracefully labeled value table factors as f(i) = i + (-1)^p(i) * g(i)
where g = |f - id| is a permutation and p is a bit vector; conjugating by a
permutation sigma gives the general expansion.  This module enumerates and
counts the permutations g ("valid gammas") that admit at least one in-range
sign choice at every vertex, enumerates the odd signed permutations that
generate gracefully labeled digraphs fixing 0, and brute-forces the count
tau_n of gracefully labeled digraphs without isolated vertices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from gracelab.digraph import (
    FunctionalDigraph,
    Permutation,
    _labels_are_graceful,
    is_gracefully_labeled,
)

__all__ = [
    "GracefulExpansion",
    "SignedPermutation",
    "count_valid_gammas",
    "decompose",
    "enumerate_sp",
    "enumerate_valid_gammas",
    "enumerate_valid_gammas_by_filter",
    "expand",
    "is_valid_gamma",
    "sp_sum_identity_check",
    "SpSumCheck",
    "tau_bounds",
    "tau_bruteforce",
]


@dataclass(frozen=True)
class GracefulExpansion:
    """Triple (sigma, gamma, p) parametrizing a graceful labeling."""

    sigma: Permutation
    gamma: Permutation
    p: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.sigma.n
        if self.gamma.n != n or len(self.p) != n:
            raise ValueError("sigma, gamma, and p must share one length")
        if any(bit not in (0, 1) for bit in self.p):
            raise ValueError("p must be a bit vector")

    @property
    def n(self) -> int:
        return self.sigma.n


def expand(e: GracefulExpansion) -> FunctionalDigraph:
    """Build the digraph f(sigma(j)) = sigma(j + (-1)^p(j) * gamma(j)).

    Raises ValueError naming the first index whose signed step leaves Z_n.
    """
    n = e.n
    out = [0] * n
    for j in range(n):
        step = e.gamma.values[j]
        t = j - step if e.p[j] else j + step
        if not 0 <= t < n:
            raise ValueError(f"sign pattern sends index {j} to {t}, outside [0, {n})")
        out[e.sigma.values[j]] = e.sigma.values[t]
    return FunctionalDigraph(tuple(out))


def decompose(g: FunctionalDigraph) -> GracefulExpansion:
    """Recover (id, gamma, p) with gamma = |f - id| from a gracefully labeled g.

    Ties at the fixed point take p = 0, so expand(decompose(g)) == g exactly.
    """
    if not is_gracefully_labeled(g):
        raise ValueError(f"not gracefully labeled: {g.format()}")
    gamma = tuple(abs(v - i) for i, v in enumerate(g.values))
    p = tuple(0 if v >= i else 1 for i, v in enumerate(g.values))
    return GracefulExpansion(Permutation.identity(g.n), Permutation(gamma), p)


def is_valid_gamma(gamma: Permutation) -> bool:
    """gamma(0) = 0 and every other index admits an in-range signed step."""
    if gamma.values[0] != 0:
        return False
    n = gamma.n
    return all(v <= i or v < n - i for i, v in enumerate(gamma.values) if i >= 1)


def enumerate_valid_gammas_by_filter(n: int) -> list[Permutation]:
    """Reference enumeration: filter all of S_n; the test oracle."""
    if n < 2:
        raise ValueError("need n >= 2")
    out = []
    for rest in itertools.permutations(range(1, n)):
        if all(v <= i or v < n - i for i, v in enumerate(rest, start=1)):
            out.append(Permutation((0,) + rest))
    return out


def enumerate_valid_gammas(n: int) -> list[Permutation]:
    """Enumerate valid gammas by placing magnitudes largest-first.

    Magnitude m can sit at index i only when i >= m (step down) or
    i <= n-1-m (step up).  Magnitudes above ceil((n-1)/2) see disjoint
    up/down ranges and are placed one by one; the remaining small
    magnitudes fit every leftover index, so they are permuted freely.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    small_top = n // 2  # ceil((n-1)/2)
    large = list(range(n - 1, small_top, -1))
    small = list(range(1, small_top + 1))
    results: list[Permutation] = []
    gamma = [0] * n

    def place(k: int, open_indices: list[int]) -> None:
        if k == len(large):
            for perm in itertools.permutations(small):
                for idx, m in zip(open_indices, perm):
                    gamma[idx] = m
                results.append(Permutation(tuple(gamma)))
            return
        m = large[k]
        for pos, i in enumerate(open_indices):
            if i >= m or i <= n - 1 - m:
                gamma[i] = m
                place(k + 1, open_indices[:pos] + open_indices[pos + 1 :])
        return

    place(0, list(range(1, n)))
    results.sort(key=lambda g: g.values)
    return results


def count_valid_gammas(n: int) -> int:
    """Closed form floor((n-1)/2)! * ceil((n-1)/2)!."""
    if n < 2:
        raise ValueError("need n >= 2")
    return math.factorial((n - 1) // 2) * math.factorial(n // 2)


@dataclass(frozen=True)
class SignedPermutation:
    """An odd bijection g of (-n, n) with i + g(i) in [0, n) for i >= 0.

    Oddness g(-i) = -g(i) forces g(0) = 0 and makes the restriction of
    i -> i + g(i) to [0, n) a gracefully labeled value table fixing 0.
    Stored as the image tuple of (-n+1, ..., n-1).
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.images)
        if m % 2 == 0:
            raise ValueError("image tuple must cover -n+1..n-1, an odd count")
        n = (m + 1) // 2
        if sorted(self.images) != list(range(-n + 1, n)):
            raise ValueError(f"not a bijection of (-{n}, {n}): {self.images!r}")
        for i in range(n):
            if self.g(-i) != -self.g(i):
                raise ValueError("not odd: g(-i) != -g(i)")
        for i in range(n):
            if not 0 <= i + self.g(i) < n:
                raise ValueError(f"i + g(i) leaves [0, {n}) at i={i}")

    @property
    def n(self) -> int:
        return (len(self.images) + 1) // 2

    def g(self, i: int) -> int:
        return self.images[i + self.n - 1]

    def to_digraph(self) -> FunctionalDigraph:
        return FunctionalDigraph(tuple(i + self.g(i) for i in range(self.n)))

    def format(self) -> str:
        return ",".join(str(v) for v in self.images)


def enumerate_sp(n: int) -> list[SignedPermutation]:
    """All signed permutations per the invariants above, sorted by image tuple."""
    if n < 1:
        raise ValueError("need n >= 1")
    results: list[SignedPermutation] = []
    upper = [0] * n  # upper[i] = g(i) for i in [0, n)

    def rec(i: int, used: int) -> None:
        if i == n:
            lower = tuple(-upper[k] for k in range(n - 1, 0, -1))
            results.append(SignedPermutation(lower + tuple(upper)))
            return
        for m in range(1, n):
            if used & (1 << m):
                continue
            for s in (m, -m):
                if 0 <= i + s < n:
                    upper[i] = s
                    rec(i + 1, used | (1 << m))

    rec(1, 0)
    results.sort(key=lambda sp: sp.images)
    return results


@dataclass(frozen=True)
class SpSumCheck:
    left: int
    right: int

    @property
    def equal(self) -> bool:
        return self.left == self.right


def sp_sum_identity_check(n: int, matrix: Sequence[Sequence[int]]) -> SpSumCheck:
    """Signed-permutation entry-product sum vs the brute-force graceful sum.

    left  = sum over enumerate_sp(n) of prod_i A[i, i+g(i)]
    right = sum over gracefully labeled f with f(0) = 0 of prod_i A[i, f(i)],
    the right side scanned directly over the n^(n-1) candidate tables.
    """
    left = 0
    for sp in enumerate_sp(n):
        term = 1
        for i in range(n):
            term *= matrix[i][i + sp.g(i)]
        left += term
    right = 0
    for rest in itertools.product(range(n), repeat=n - 1):
        values = (0,) + rest
        if _labels_are_graceful(values):
            term = 1
            for i, v in enumerate(values):
                term *= matrix[i][v]
            right += term
    return SpSumCheck(left, right)


def tau_bounds(n: int) -> tuple[int, int]:
    """Lower/upper bounds for the count of gracefully labeled digraphs
    without isolated vertices: c*2 and c*n*2^ceil((n-1)/2) for
    c = floor((n-1)/2)! * ceil((n-1)/2)!."""
    if n < 2:
        raise ValueError("need n >= 2")
    c = count_valid_gammas(n)
    return 2 * c, c * n * 2 ** (n // 2)


def tau_bruteforce(n: int) -> int:
    """Count gracefully labeled value tables with no isolated vertex.

    A vertex v is isolated when f(v) = v and no other vertex maps to v;
    a gracefully labeled table has exactly one fixed point, so only that
    vertex can be isolated.
    """
    count = 0
    for values in itertools.product(range(n), repeat=n):
        if not _labels_are_graceful(values):
            continue
        fixed = next(i for i, v in enumerate(values) if v == i)
        if any(v == fixed for i, v in enumerate(values) if i != fixed):
            count += 1
    return count
