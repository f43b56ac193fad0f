"""Homogeneous quasisymmetric functions of degree n over Q[t].

Elements are stored in the monomial basis (keys: compositions of n) or in
the fundamental basis (keys: sorted subsets of {1..n-1}).  Coefficients are
`TPoly` values; zero coefficients are never stored.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from functools import lru_cache
from typing import Iterable

from .algebra import (
    TPoly,
    as_composition,
    comp_descents,
    descent_comp,
    rearrangements_of,
    sort_to_partition,
)
from .errors import NotSymmetricError

M_BASIS = "M"
F_BASIS = "F"


class QSymElement:
    """Degree-n quasisymmetric function in the M or F basis."""

    __slots__ = ("n", "basis", "terms")

    def __init__(self, n: int, basis: str, terms=()):
        if n < 0:
            raise ValueError("degree must be nonnegative")
        if basis not in (M_BASIS, F_BASIS):
            raise ValueError(f"unknown basis {basis!r}")
        clean: dict[tuple, TPoly] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, poly in items:
            key = tuple(int(x) for x in key)
            if basis == M_BASIS:
                as_composition(key)
                if sum(key) != n:
                    raise ValueError(f"composition {key} does not sum to {n}")
            else:
                if any(not 1 <= x <= n - 1 for x in key) or len(set(key)) != len(key):
                    raise ValueError(f"{key} is not a subset of 1..{n - 1}")
                key = tuple(sorted(key))
            if not isinstance(poly, TPoly):
                poly = TPoly(poly) if isinstance(poly, (list, tuple)) else TPoly((poly,))
            if poly:
                clean[key] = clean.get(key, TPoly.zero()) + poly
                if not clean[key]:
                    del clean[key]
        self.n = n
        self.basis = basis
        self.terms: dict[tuple, TPoly] = clean

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, key: Iterable[int]) -> TPoly:
        return self.terms.get(tuple(key), TPoly.zero())

    def sorted_terms(self) -> list[tuple[tuple, TPoly]]:
        return sorted(self.terms.items())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QSymElement)
            and self.n == other.n
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.basis, frozenset(self.terms.items())))

    def __add__(self, other: QSymElement) -> QSymElement:
        self._check_compatible(other)
        out = dict(self.terms)
        for key, poly in other.terms.items():
            out[key] = out.get(key, TPoly.zero()) + poly
        return QSymElement(self.n, self.basis, out)

    def __sub__(self, other: QSymElement) -> QSymElement:
        return self + other.scale(-1)

    def scale(self, c) -> QSymElement:
        """Multiply every coefficient by a scalar or a TPoly."""
        return QSymElement(
            self.n, self.basis, ((k, p * c) for k, p in self.terms.items())
        )

    def _check_compatible(self, other: QSymElement):
        if not isinstance(other, QSymElement):
            raise TypeError("expected a QSymElement")
        if self.n != other.n or self.basis != other.basis:
            raise ValueError("mismatched degree or basis")

    def __repr__(self) -> str:
        return f"QSymElement({self.n}, {self.basis!r}, {self.sorted_terms()!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        bits = []
        for key, poly in self.sorted_terms():
            inner = ",".join(map(str, key))
            label = f"M[{inner}]" if self.basis == M_BASIS else f"F{{{inner}}}"
            bits.append(f"({poly})*{label}")
        return " + ".join(bits)

    def latex(self) -> str:
        if self.is_zero:
            return "0"
        bits = []
        for key, poly in self.sorted_terms():
            if self.basis == M_BASIS:
                label = "M_{(" + ",".join(map(str, key)) + ")}"
            else:
                inner = ",".join(map(str, key)) if key else r"\emptyset"
                label = f"F_{{{self.n},\\{{{inner}\\}}}}" if key else f"F_{{{self.n},\\emptyset}}"
            bits.append(rf"\left({poly.latex()}\right){label}")
        return " + ".join(bits)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "terms": [
                {"key": list(k), "poly": p.to_json()} for k, p in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> QSymElement:
        return cls(
            int(data["n"]),
            data["basis"],
            ((t["key"], TPoly.from_json(t["poly"])) for t in data["terms"]),
        )


def qsym_one() -> QSymElement:
    """The multiplicative identity (degree 0)."""
    return QSymElement(0, M_BASIS, {(): TPoly.one()})


# ---------------------------------------------------------------------------
# basis change M <-> F
# ---------------------------------------------------------------------------

def m_to_f(q: QSymElement) -> QSymElement:
    """Expand an M-basis element over the fundamental basis (Moebius signs)."""
    if q.basis != M_BASIS:
        raise ValueError("expected M basis")
    acc: dict[tuple, TPoly] = {}
    for comp, poly in q.terms.items():
        base = set(comp_descents(comp))
        rest = [i for i in range(1, q.n) if i not in base]
        for k in range(len(rest) + 1):
            for extra in itertools.combinations(rest, k):
                key = tuple(sorted(base.union(extra)))
                signed = poly if k % 2 == 0 else -poly
                acc[key] = acc.get(key, TPoly.zero()) + signed
    return QSymElement(q.n, F_BASIS, acc)


def f_to_m(q: QSymElement) -> QSymElement:
    """Expand an F-basis element over the monomial basis (refinement sum)."""
    if q.basis != F_BASIS:
        raise ValueError("expected F basis")
    acc: dict[tuple, TPoly] = {}
    for subset, poly in q.terms.items():
        base = set(subset)
        rest = [i for i in range(1, q.n) if i not in base]
        for k in range(len(rest) + 1):
            for extra in itertools.combinations(rest, k):
                comp = descent_comp(q.n, base.union(extra))
                acc[comp] = acc.get(comp, TPoly.zero()) + poly
    return QSymElement(q.n, M_BASIS, acc)


# ---------------------------------------------------------------------------
# product
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _overlapping_shuffles(a: tuple, b: tuple) -> tuple:
    """Overlapping shuffles of two compositions, with multiplicity."""
    if not a:
        return (b,)
    if not b:
        return (a,)
    out = []
    out.extend((a[0],) + t for t in _overlapping_shuffles(a[1:], b))
    out.extend((b[0],) + t for t in _overlapping_shuffles(a, b[1:]))
    out.extend((a[0] + b[0],) + t for t in _overlapping_shuffles(a[1:], b[1:]))
    return tuple(out)


def qsym_multiply(a: QSymElement, b: QSymElement) -> QSymElement:
    """Product of two M-basis elements (overlapping shuffle of compositions)."""
    if a.basis != M_BASIS or b.basis != M_BASIS:
        raise ValueError("expected M basis on both factors")
    acc: dict[tuple, TPoly] = {}
    for alpha, pa in a.terms.items():
        for beta, pb in b.terms.items():
            pab = pa * pb
            for gamma, mult in Counter(_overlapping_shuffles(alpha, beta)).items():
                acc[gamma] = acc.get(gamma, TPoly.zero()) + pab * mult
    return QSymElement(a.n + b.n, M_BASIS, acc)


# ---------------------------------------------------------------------------
# involutions
# ---------------------------------------------------------------------------

def rho(q: QSymElement) -> QSymElement:
    """Reverse every composition key; fixes symmetric elements."""
    if q.basis != M_BASIS:
        raise ValueError("expected M basis")
    return QSymElement(
        q.n, M_BASIS, ((tuple(reversed(k)), p) for k, p in q.terms.items())
    )


def omega_f(q: QSymElement) -> QSymElement:
    """Complement every descent-set key within {1..n-1}.

    This is the plain-complement convention; the standard quasisymmetric
    involution also reflects the subset through i -> n - i.  The two agree on
    symmetric elements, where coefficients are reflection-invariant.
    """
    if q.basis != F_BASIS:
        raise ValueError("expected F basis")
    full = range(1, q.n)
    return QSymElement(
        q.n,
        F_BASIS,
        ((tuple(i for i in full if i not in set(k)), p) for k, p in q.terms.items()),
    )


# ---------------------------------------------------------------------------
# symmetry and specialization
# ---------------------------------------------------------------------------

def symmetric_witness(q: QSymElement):
    """None if symmetric; else a pair of compositions with unequal coefficients."""
    if q.basis != M_BASIS:
        q = f_to_m(q)
    seen_partitions = {sort_to_partition(comp) for comp in q.terms}
    for lam in seen_partitions:
        comps = rearrangements_of(lam)
        ref = q.coeff(comps[0])
        for comp in comps[1:]:
            if q.coeff(comp) != ref:
                return comps[0], comp
    return None


def is_symmetric(q: QSymElement) -> bool:
    return symmetric_witness(q) is None


def specialize_ones(q: QSymElement, m: int) -> TPoly:
    """Exact value after setting x_1 = ... = x_m = 1 and the rest to 0."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    acc = TPoly.zero()
    if q.basis == M_BASIS:
        for comp, poly in q.terms.items():
            acc = acc + poly * math.comb(m, len(comp))
    else:
        for subset, poly in q.terms.items():
            acc = acc + poly * math.comb(m + q.n - 1 - len(subset), q.n)
    return acc


def to_monomial_symmetric(q: QSymElement):
    """Collapse a symmetric M-basis element to the m-basis of Sym.

    Raises NotSymmetricError (with a witness composition pair) otherwise.
    """
    from .sym import M_SYM, SymElement

    if q.basis != M_BASIS:
        q = f_to_m(q)
    witness = symmetric_witness(q)
    if witness is not None:
        raise NotSymmetricError(*witness)
    terms = {}
    for comp, poly in q.terms.items():
        lam = sort_to_partition(comp)
        if lam not in terms:
            terms[lam] = poly
    return SymElement(q.n, M_SYM, terms)
