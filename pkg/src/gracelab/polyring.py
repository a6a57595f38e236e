"""Exact sparse univariate polynomials with big-integer exponents.

Exponents grow like (n+1)^(n-1) in the label-sequence generating functions,
so both exponents and coefficients are plain Python ints (arbitrary
precision).  Values are immutable; arithmetic returns fresh polynomials and
cancellation never leaves a stored zero coefficient.
"""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["SparsePoly"]


class SparsePoly:
    """Finite map from non-negative exponent to nonzero integer coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        data: dict[int, int] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for exponent, coefficient in pairs:
            if exponent < 0:
                raise ValueError(f"negative exponent: {exponent}")
            if coefficient:
                c = data.get(exponent, 0) + coefficient
                if c:
                    data[exponent] = c
                else:
                    del data[exponent]
        self._terms = data

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls()

    @classmethod
    def one(cls) -> "SparsePoly":
        return cls.monomial(0)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "SparsePoly":
        """The polynomial coefficient * x^exponent."""
        if exponent < 0:
            raise ValueError(f"negative exponent: {exponent}")
        return cls({exponent: coefficient})

    def items(self) -> list[tuple[int, int]]:
        """Terms as (exponent, coefficient) pairs, ascending exponent."""
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def term_count(self) -> int:
        return len(self._terms)

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        result = SparsePoly.zero()
        result._terms = out
        return result

    def __neg__(self) -> "SparsePoly":
        result = SparsePoly.zero()
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        result = SparsePoly.zero()
        result._terms = out
        return result

    def scale(self, factor: int) -> "SparsePoly":
        if factor == 0:
            return SparsePoly.zero()
        result = SparsePoly.zero()
        result._terms = {e: factor * c for e, c in self._terms.items()}
        return result

    def to_pairs(self) -> list[list[str]]:
        """Golden-file form: [exponent, coefficient] decimal-string pairs,
        ascending exponent."""
        return [[str(e), str(c)] for e, c in self.items()]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[str]]) -> "SparsePoly":
        return cls((int(e), int(c)) for e, c in pairs)

    def __repr__(self) -> str:
        if not self._terms:
            return "SparsePoly(0)"
        bits = []
        for e, c in self.items():
            if e == 0:
                bits.append(str(c))
            elif c == 1:
                bits.append(f"x^{e}")
            else:
                bits.append(f"{c}*x^{e}")
        return "SparsePoly(" + " + ".join(bits) + ")"
