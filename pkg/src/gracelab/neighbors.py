"""Edit-distance-one graceful neighbors via single sign flips.

Every gracefully labeled conjugate of a base digraph decomposes as
id + (-1)^p * gamma; flipping one bit of p (when the flipped step stays in
range) yields another gracefully labeled digraph that differs from that
conjugate in at most one image, hence sits at edge edit distance at most one
from the base.  The brute-force oracle enumerates conjugates directly and
patches one value at a time, so the completeness of the flip generator is
measured, never assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from gracelab.digraph import (
    FunctionalDigraph,
    Permutation,
    _labels_are_graceful,
)
from gracelab.expansion import GracefulExpansion, decompose, expand

__all__ = [
    "ExpansionFamily",
    "NeighborReport",
    "completeness_check",
    "edit_distance_at_most",
    "expansion_family",
    "neighbors_bruteforce",
    "neighbors_via_expansion",
    "single_sign_flip",
]


@dataclass(frozen=True)
class ExpansionFamily:
    """Per-gamma parametrizations (sigma_gamma, p_gamma) of one base digraph."""

    base: FunctionalDigraph
    members: tuple[tuple[Permutation, Permutation, tuple[int, ...]], ...]
    # each member is (gamma, sigma_gamma, p_gamma)

    def __post_init__(self) -> None:
        for gamma, sigma, p in self.members:
            got = expand(GracefulExpansion(sigma, gamma, p))
            if got != self.base:
                raise ValueError(
                    f"family member gamma={gamma.format()} expands to "
                    f"{got.format()}, not the base {self.base.format()}"
                )


def expansion_family(base: FunctionalDigraph) -> ExpansionFamily:
    """Build the family by decomposing every gracefully labeled conjugate.

    For each sigma with H = sigma f sigma^(-1) gracefully labeled, H itself
    decomposes as id + (-1)^p * gamma, and conjugating back by sigma^(-1)
    re-expands to the base; one (first in lexicographic sigma order)
    parametrization is kept per distinct gamma.
    """
    n = base.n
    vals = base.values
    members: dict[tuple[int, ...], tuple[Permutation, Permutation, tuple[int, ...]]] = {}
    for s in itertools.permutations(range(n)):
        table = [0] * n
        for j, v in enumerate(vals):
            table[s[j]] = s[v]
        t = tuple(table)
        if not _labels_are_graceful(t):
            continue
        e = decompose(FunctionalDigraph(t))
        if e.gamma.values not in members:
            sigma_inv = Permutation(s).inverse()
            members[e.gamma.values] = (e.gamma, sigma_inv, e.p)
    ordered = tuple(members[k] for k in sorted(members))
    return ExpansionFamily(base, ordered)


def single_sign_flip(e: GracefulExpansion, j: int) -> GracefulExpansion | None:
    """Flip bit j of p; returns None when the flipped step leaves [0, n)."""
    n = e.n
    if not 0 <= j < n:
        raise ValueError(f"flip index {j} outside [0, {n})")
    flipped = (1 + e.p[j]) % 2
    step = e.gamma.values[j]
    t = j - step if flipped else j + step
    if not 0 <= t < n:
        return None
    p = e.p[:j] + (flipped,) + e.p[j + 1 :]
    return GracefulExpansion(e.sigma, e.gamma, p)


def neighbors_via_expansion(fam: ExpansionFamily) -> list[FunctionalDigraph]:
    """All digraphs id + (-1)^p' * gamma over valid single flips, deduplicated
    and sorted; flips that reproduce a conjugate of the base stay in."""
    n = fam.base.n
    identity = Permutation.identity(n)
    found: set[tuple[int, ...]] = set()
    for gamma, _sigma, p in fam.members:
        e = GracefulExpansion(identity, gamma, p)
        for j in range(n):
            flipped = single_sign_flip(e, j)
            if flipped is not None:
                found.add(expand(flipped).values)
    return [FunctionalDigraph(t) for t in sorted(found)]


def edit_distance_at_most(
    g: FunctionalDigraph, h: FunctionalDigraph, k: int
) -> bool:
    """True iff h agrees with some conjugate of g outside <= k positions."""
    if g.n != h.n:
        raise ValueError("digraphs must share a vertex count")
    n = g.n
    vals = g.values
    target = h.values
    for s in itertools.permutations(range(n)):
        mismatches = 0
        for j in range(n):
            if target[s[j]] != s[vals[j]]:
                mismatches += 1
                if mismatches > k:
                    break
        if mismatches <= k:
            return True
    return False


def neighbors_bruteforce(g: FunctionalDigraph) -> list[FunctionalDigraph]:
    """Oracle: every gracefully labeled digraph at edit distance <= 1,
    built by patching one image of each conjugate of g."""
    n = g.n
    vals = g.values
    found: set[tuple[int, ...]] = set()
    for s in itertools.permutations(range(n)):
        table = [0] * n
        for j, v in enumerate(vals):
            table[s[j]] = s[v]
        for j in range(n):
            original = table[j]
            for v in range(n):
                table[j] = v
                t = tuple(table)
                if _labels_are_graceful(t):
                    found.add(t)
            table[j] = original
    return [FunctionalDigraph(t) for t in sorted(found)]


@dataclass(frozen=True)
class NeighborReport:
    inputs: ExpansionFamily
    generated: tuple[FunctionalDigraph, ...]
    oracle: tuple[FunctionalDigraph, ...]
    missing: tuple[FunctionalDigraph, ...]
    extra: tuple[FunctionalDigraph, ...]


def completeness_check(fam: ExpansionFamily) -> NeighborReport:
    """Measure the flip generator against the brute-force oracle.

    missing = oracle \\ generated, extra = generated \\ oracle; the report
    states what was found, it does not assert that missing is empty.
    """
    generated = neighbors_via_expansion(fam)
    oracle = neighbors_bruteforce(fam.base)
    generated_set = {g.values for g in generated}
    oracle_set = {g.values for g in oracle}
    missing = [FunctionalDigraph(t) for t in sorted(oracle_set - generated_set)]
    extra = [FunctionalDigraph(t) for t in sorted(generated_set - oracle_set)]
    return NeighborReport(
        inputs=fam,
        generated=tuple(generated),
        oracle=tuple(oracle),
        missing=tuple(missing),
        extra=tuple(extra),
    )
