"""Exhaustive small-n sweep of the star-sequence inclusion conjecture.

The conjecture: every induced subtractive edge label sequence of a constant
function (a star) appears among the label sequences realized by relabelings
of every functional tree class.  Classes are conjugation orbits of
functional trees; representatives are the lexicographically least value
tables of their orbits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from gracelab.digraph import (
    FunctionalDigraph,
    Permutation,
    edge_labels,
    is_functional_tree,
    relabel,
)

__all__ = [
    "ConjectureReport",
    "TreeClass",
    "check_conjecture_42",
    "class_sequences",
    "star_sequences",
    "tree_classes",
]


@dataclass(frozen=True)
class TreeClass:
    """A conjugation orbit of functional trees: canonical representative + size."""

    representative: FunctionalDigraph
    size: int

    def __post_init__(self) -> None:
        if not is_functional_tree(self.representative):
            raise ValueError("representative is not a functional tree")


def star_sequences(n: int) -> list[tuple[int, ...]]:
    """Distinct label sequences of the constant functions; there are ceil(n/2)
    because c and n-1-c mirror each other."""
    if n < 1:
        raise ValueError("need n >= 1")
    return sorted({tuple(sorted(abs(c - i) for i in range(n))) for c in range(n)})


def _orbit(values: tuple[int, ...]) -> set[tuple[int, ...]]:
    n = len(values)
    orbit: set[tuple[int, ...]] = set()
    for s in itertools.permutations(range(n)):
        table = [0] * n
        for j, v in enumerate(values):
            table[s[j]] = s[v]
        orbit.add(tuple(table))
    return orbit


def tree_classes(n: int) -> list[TreeClass]:
    """One canonical representative per conjugation orbit of functional trees.

    Trees are enumerated by the n^n scan; each unseen tree contributes its
    whole orbit at once, so canonicalization costs n! per class, not per tree.
    """
    seen: set[tuple[int, ...]] = set()
    classes: list[TreeClass] = []
    for values in itertools.product(range(n), repeat=n):
        if values in seen:
            continue
        if not is_functional_tree(FunctionalDigraph(values)):
            continue
        orbit = _orbit(values)
        seen.update(orbit)
        classes.append(TreeClass(FunctionalDigraph(min(orbit)), len(orbit)))
    classes.sort(key=lambda c: c.representative.values)
    return classes


def class_sequences(t: TreeClass) -> set[tuple[int, ...]]:
    """All label sequences realized over the relabelings of the class."""
    n = t.representative.n
    out: set[tuple[int, ...]] = set()
    for s in itertools.permutations(range(n)):
        out.add(edge_labels(relabel(t.representative, Permutation(s))))
    return out


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    classes: tuple[TreeClass, ...]
    missing: tuple[tuple[FunctionalDigraph, tuple[int, ...]], ...]

    @property
    def holds(self) -> bool:
        return not self.missing

    @property
    def class_size_total(self) -> int:
        return sum(c.size for c in self.classes)


def check_conjecture_42(n: int) -> ConjectureReport:
    """For every tree class, is every star sequence realized?  Any missing
    (class representative, sequence) pair is listed; an empty list means the
    conjecture holds at this n."""
    stars = star_sequences(n)
    classes = tree_classes(n)
    missing = []
    for t in classes:
        realized = class_sequences(t)
        for seq in stars:
            if seq not in realized:
                missing.append((t.representative, seq))
    return ConjectureReport(n=n, classes=tuple(classes), missing=tuple(missing))
