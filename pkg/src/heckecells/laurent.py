"""
Exact Laurent polynomials in one variable v.

Coefficients are plain Python integers (arbitrary precision), so nothing
ever wraps around silently; a rational view (`rationalize`) is available
for the few places where tensoring with Q matters.  Values are immutable
and normalized on construction: zero coefficients are never stored, so
equality is structural and hashing is safe.

>>> p = LaurentPoly({1: 1, -1: 1})     # v + v^-1
>>> p * p == LaurentPoly({2: 1, 0: 2, -2: 1})
True
>>> p.bar() == p                       # symmetric under v -> v^-1
True
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """A finitely supported map exponent -> coefficient, exponent in Z."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for k, a in coeffs.items():
                if a:
                    c[int(k)] = a
        self._c = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return LaurentPoly({exponent: coefficient})

    @staticmethod
    def from_pairs(pairs: Iterable[Iterable[int]]) -> "LaurentPoly":
        """Inverse of `to_pairs`; later duplicates accumulate."""
        p = {}
        for e, a in pairs:
            p[e] = p.get(e, 0) + a
        return LaurentPoly(p)

    # -- inspection ---------------------------------------------------

    def items(self):
        return self._c.items()

    def coeff(self, exponent: int) -> int:
        """Coefficient of v**exponent (0 if absent)."""
        return self._c.get(exponent, 0)

    @property
    def degree(self) -> int | None:
        """Top exponent, or None for the zero polynomial."""
        return max(self._c) if self._c else None

    @property
    def valuation(self) -> int | None:
        """Bottom exponent, or None for the zero polynomial."""
        return min(self._c) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def to_pairs(self) -> list[list[int]]:
        """Sorted [exponent, coefficient] pairs, ascending exponent."""
        return [[e, self._c[e]] for e in sorted(self._c)]

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other._c:
            return self
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            elif e in c:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -a for e, a in self._c.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + a1 * a2
                if s:
                    c[e] = s
                elif e in c:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    def scale(self, factor: int) -> "LaurentPoly":
        if not factor:
            return ZERO
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: factor * a for e, a in self._c.items()}
        return out

    def shift(self, exponent: int) -> "LaurentPoly":
        """Multiply by v**exponent."""
        if not exponent:
            return self
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + exponent: a for e, a in self._c.items()}
        return out

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1 (negate every exponent)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {-e: a for e, a in self._c.items()}
        return out

    def rationalize(self) -> "LaurentPoly":
        """The same polynomial with Fraction coefficients (the Q view)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: Fraction(a) for e, a in self._c.items()}
        return out

    def __call__(self, value):
        """Evaluate at a nonzero scalar."""
        return sum(a * value**e for e, a in self._c.items())

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            a = self._c[e]
            if e == 0:
                parts.append(f"{a}")
                continue
            va = "v" if e == 1 else f"v^{e}"
            if a == 1:
                parts.append(va)
            elif a == -1:
                parts.append(f"-{va}")
            else:
                parts.append(f"{a}*{va}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})
VINV = LaurentPoly({-1: 1})
V_PLUS_VINV = LaurentPoly({1: 1, -1: 1})
