"""Exact univariate polynomials in t over Q, plus partition/composition tools.

Everything here is immutable and pure: polynomials are dense tuples of
`Fraction` coefficients, compositions and partitions are plain tuples of
positive integers.  No floating point anywhere.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

Composition = tuple  # nonempty tuple of positive ints (empty only for degree 0)
Partition = tuple  # weakly decreasing tuple of positive ints


class TPoly:
    """Polynomial in t with exact rational coefficients.

    Coefficients are stored densely by exponent, trailing zeros trimmed,
    so the zero polynomial stores nothing at all.

    >>> TPoly([1, 2, 1]) * TPoly([1, 1])
    TPoly('1 + 3*t + 3*t^2 + t^3')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> TPoly:
        return cls()

    @classmethod
    def one(cls) -> TPoly:
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c=1) -> TPoly:
        """c * t^k."""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * k + (c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        """Coefficient of t^k (zero outside the stored range)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == TPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> TPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self) -> TPoly:
        return TPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> TPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> TPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> TPoly:
        if isinstance(other, (int, Fraction)):
            return TPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, TPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return TPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TPoly:
        if k < 0:
            raise ValueError("negative power")
        out = TPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def shifted(self, k: int) -> TPoly:
        """Multiply by t^k."""
        if self.is_zero:
            return self
        return TPoly((0,) * k + self.coeffs)

    def __call__(self, x) -> Fraction:
        """Exact evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> TPoly:
        return cls(Fraction(s) for s in data)

    def __str__(self) -> str:
        return _render(self.coeffs, var="t", power="^", frac=str)

    def latex(self) -> str:
        def frac(c):
            if c.denominator == 1:
                return str(c.numerator)
            sign = "-" if c < 0 else ""
            return rf"{sign}\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"

        return _render(self.coeffs, var="t", power="^", frac=frac, braces=True)

    def __repr__(self) -> str:
        return f"TPoly({str(self)!r})"


def _coerce(x):
    if isinstance(x, TPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return TPoly((x,))
    return NotImplemented


def _render(coeffs, var, power, frac, braces=False) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            term = frac(c)
        else:
            v = var if k == 1 else (f"{var}{power}{{{k}}}" if braces else f"{var}{power}{k}")
            if c == 1:
                term = v
            elif c == -1:
                term = f"-{v}"
            else:
                term = f"{frac(c)}{v}" if braces else f"{frac(c)}*{v}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


# ---------------------------------------------------------------------------
# t-analog gadgets
# ---------------------------------------------------------------------------

def t_bracket(n: int) -> TPoly:
    """[n]_t = 1 + t + ... + t^(n-1); the zero polynomial for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return TPoly((1,) * n)


def t_factorial(n: int) -> TPoly:
    """[n]_t! = [n]_t [n-1]_t ... [1]_t; 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = TPoly.one()
    for k in range(2, n + 1):
        out = out * t_bracket(k)
    return out


@lru_cache(maxsize=None)
def eulerian_poly(n: int) -> TPoly:
    """Ascent generating polynomial of S_n, by the classical triangle recurrence.

    A(n, k) counts permutations of [n] with k ascents:
    A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return TPoly.one()
    row = [1]  # A(1, *) = [1]
    for m in range(2, n + 1):
        prev = row
        row = [0] * m
        for k in range(m):
            val = 0
            if k < len(prev):
                val += (k + 1) * prev[k]
            if k - 1 >= 0:
                val += (m - k) * prev[k - 1]
            row[k] = val
    return TPoly(row)


def eulerian_poly_by_enumeration(n: int) -> TPoly:
    """Sum of t^(ascents) over all of S_n by direct enumeration (n <= 9)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 9:
        raise ValueError("direct enumeration capped at n = 9")
    counts = [0] * max(n, 1)
    for sigma in itertools.permutations(range(n)):
        asc = sum(1 for i in range(n - 1) if sigma[i] < sigma[i + 1])
        counts[asc] += 1
    return TPoly(counts)


# ---------------------------------------------------------------------------
# partitions, compositions, descent sets
# ---------------------------------------------------------------------------

def as_composition(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {parts}")
    return parts


def as_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def sort_to_partition(comp: Iterable[int]) -> Partition:
    """The partition obtained by sorting a composition's parts."""
    return tuple(sorted(comp, reverse=True))


def compositions_of(n: int) -> list[Composition]:
    """All compositions of n, lexicographic by parts.

    >>> compositions_of(3)
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out = []

    def rec(remaining, prefix):
        if remaining == 0:
            out.append(prefix)
            return
        for first in range(1, remaining + 1):
            rec(remaining - first, prefix + (first,))

    rec(n, ())
    return out


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, reverse lexicographic.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(prefix)
            return
        for first in range(min(cap, remaining), 0, -1):
            rec(remaining - first, first, prefix + (first,))

    rec(n, n, ())
    return out


def rearrangements_of(lam: Iterable[int]) -> list[Composition]:
    """All distinct compositions whose sorted parts give this partition, lex order.

    >>> rearrangements_of((2, 1))
    [(1, 2), (2, 1)]
    """
    lam = tuple(lam)
    counts = Counter(lam)
    values = sorted(counts)
    out = []

    def rec(prefix, remaining):
        if remaining == 0:
            out.append(prefix)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                rec(prefix + (v,), remaining - 1)
                counts[v] += 1

    rec((), len(lam))
    return out


def num_rearrangements(lam: Iterable[int]) -> int:
    """l(lam)! / prod_i m_i(lam)!"""
    lam = tuple(lam)
    out = math.factorial(len(lam))
    for mult in Counter(lam).values():
        out //= math.factorial(mult)
    return out


def z_lambda(lam: Iterable[int]) -> int:
    """Centralizer size prod_i m_i(lam)! * i^m_i(lam)."""
    lam = as_partition(sorted(lam, reverse=True))
    out = 1
    for i, mult in Counter(lam).items():
        out *= math.factorial(mult) * i**mult
    return out


def comp_descents(comp: Iterable[int]) -> tuple[int, ...]:
    """Partial sums of a composition, excluding the total (a subset of [n-1])."""
    comp = tuple(comp)
    sums = list(itertools.accumulate(comp))
    return tuple(sums[:-1])


def descent_comp(n: int, subset: Iterable[int]) -> Composition:
    """Composition of n determined by a descent subset of {1..n-1}."""
    s = sorted(subset)
    if any(not 1 <= x <= n - 1 for x in s) or len(set(s)) != len(s):
        raise ValueError(f"not a subset of 1..{n - 1}: {subset}")
    bounds = [0] + s + [n]
    return tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def subsets_of_range(n: int) -> Iterator[tuple[int, ...]]:
    """All subsets of {1..n-1}, as sorted tuples."""
    ground = range(1, n)
    for k in range(n):
        yield from itertools.combinations(ground, k)


# ---------------------------------------------------------------------------
# coefficient-shape predicates
# ---------------------------------------------------------------------------

def is_palindromic(p: TPoly, center) -> bool:
    """True iff coeff(t^j) == coeff(t^(2*center - j)) for all j.

    `center` must be a half-integer >= 0.  The zero polynomial is palindromic
    about any center.
    """
    c2 = Fraction(center) * 2
    if c2.denominator != 1 or c2 < 0:
        raise ValueError("center must be a nonnegative half-integer")
    c2 = int(c2)
    top = max(p.degree(), c2)
    return all(p.coeff(j) == p.coeff(c2 - j) for j in range(top + 1))


def is_unimodal(p: TPoly) -> bool:
    """Weakly increasing then weakly decreasing coefficient sequence."""
    cs = p.coeffs
    i = 0
    while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
        i += 1
    return i >= len(cs) - 1
