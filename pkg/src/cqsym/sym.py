"""Homogeneous symmetric functions of degree n in the m/e/p/h bases.

Basis changes go through exact rational transition matrices computed at
runtime: e_k, p_k, h_k are expanded over the monomial quasisymmetric basis,
multiplied there, and symmetrized; the resulting b -> m matrices are
inverted by Fraction Gaussian elimination.  Tables are cached per degree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .algebra import (
    TPoly,
    as_partition,
    compositions_of,
    is_palindromic,
    partitions_of,
)
from .errors import BoundExceededError
from .qsym import M_BASIS, QSymElement, qsym_multiply, qsym_one

M_SYM = "m"
E_SYM = "e"
P_SYM = "p"
H_SYM = "h"
BASES = (M_SYM, E_SYM, P_SYM, H_SYM)

TRANSITION_CAP = 12


class SymElement:
    """Degree-n symmetric function; keys are partitions, values TPoly."""

    __slots__ = ("n", "basis", "terms")

    def __init__(self, n: int, basis: str, terms=()):
        if n < 0:
            raise ValueError("degree must be nonnegative")
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean: dict[tuple, TPoly] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, poly in items:
            key = as_partition(key)
            if sum(key) != n:
                raise ValueError(f"partition {key} does not sum to {n}")
            if not isinstance(poly, TPoly):
                poly = TPoly(poly) if isinstance(poly, (list, tuple)) else TPoly((poly,))
            if poly:
                clean[key] = clean.get(key, TPoly.zero()) + poly
                if not clean[key]:
                    del clean[key]
        self.n = n
        self.basis = basis
        self.terms = clean

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, lam: Iterable[int]) -> TPoly:
        return self.terms.get(tuple(lam), TPoly.zero())

    def sorted_terms(self) -> list[tuple[tuple, TPoly]]:
        # canonical partition order: reverse lexicographic
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymElement)
            and self.n == other.n
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.basis, frozenset(self.terms.items())))

    def __add__(self, other: SymElement) -> SymElement:
        if self.n != other.n or self.basis != other.basis:
            raise ValueError("mismatched degree or basis")
        out = dict(self.terms)
        for key, poly in other.terms.items():
            out[key] = out.get(key, TPoly.zero()) + poly
        return SymElement(self.n, self.basis, out)

    def __sub__(self, other: SymElement) -> SymElement:
        return self + other.scale(-1)

    def scale(self, c) -> SymElement:
        return SymElement(self.n, self.basis, ((k, p * c) for k, p in self.terms.items()))

    def __repr__(self) -> str:
        return f"SymElement({self.n}, {self.basis!r}, {self.sorted_terms()!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        bits = []
        for key, poly in self.sorted_terms():
            bits.append(f"({poly})*{self.basis}[{','.join(map(str, key))}]")
        return " + ".join(bits)

    def latex(self) -> str:
        if self.is_zero:
            return "0"
        bits = []
        for key, poly in self.sorted_terms():
            label = f"{self.basis}_{{({','.join(map(str, key))})}}"
            bits.append(rf"\left({poly.latex()}\right){label}")
        return " + ".join(bits)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "terms": [
                {"partition": list(k), "poly": p.to_json()}
                for k, p in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> SymElement:
        return cls(
            int(data["n"]),
            data["basis"],
            ((t["partition"], TPoly.from_json(t["poly"])) for t in data["terms"]),
        )


# ---------------------------------------------------------------------------
# transition tables
# ---------------------------------------------------------------------------

class TransitionTable:
    """Exact change-of-basis matrices among m, e, p, h for one degree.

    `to_m[b][i][j]` is the coefficient of m_(parts[j]) in b_(parts[i]);
    `from_m[b]` is its inverse.  Rows/columns follow `parts`, the canonical
    reverse-lexicographic partition list.
    """

    __slots__ = ("n", "parts", "index", "to_m", "from_m")

    def __init__(self, n, parts, to_m, from_m):
        self.n = n
        self.parts = parts
        self.index = {lam: i for i, lam in enumerate(parts)}
        self.to_m = to_m
        self.from_m = from_m


@lru_cache(maxsize=None)
def _generator_in_monomial(basis: str, k: int) -> QSymElement:
    """e_k, p_k or h_k as a degree-k quasisymmetric element."""
    if basis == E_SYM:
        return QSymElement(k, M_BASIS, {(1,) * k: TPoly.one()})
    if basis == P_SYM:
        return QSymElement(k, M_BASIS, {(k,): TPoly.one()})
    if basis == H_SYM:
        return QSymElement(k, M_BASIS, {tuple(c): TPoly.one() for c in compositions_of(k)})
    raise ValueError(basis)


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination."""
    size = len(matrix)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
        for i, row in enumerate(matrix)
    ]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular transition matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def build_transitions(n: int, cap: int = TRANSITION_CAP) -> TransitionTable:
    """Build (and cache) the degree-n transition table; 1 <= n <= cap."""
    if not 1 <= n <= cap:
        raise BoundExceededError(f"transition degree {n} outside 1..{cap}")
    parts = partitions_of(n)
    index = {lam: i for i, lam in enumerate(parts)}
    to_m = {}
    from_m = {}
    for basis in (E_SYM, P_SYM, H_SYM):
        rows = []
        for lam in parts:
            prod = qsym_one()
            for part in lam:
                prod = qsym_multiply(prod, _generator_in_monomial(basis, part))
            row = [Fraction(0)] * len(parts)
            for mu in parts:
                # symmetric: the m_mu coefficient is the M_mu coefficient
                row[index[mu]] = prod.coeff(mu).coeff(0)
            rows.append(row)
        to_m[basis] = rows
        from_m[basis] = _invert(rows)
    return TransitionTable(n, parts, to_m, from_m)


def convert(s: SymElement, target: str) -> SymElement:
    """Rewrite in another of the m/e/p/h bases (same abstract function)."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if target == s.basis or s.is_zero:
        return SymElement(s.n, target, s.terms)
    table = build_transitions(s.n)
    # coefficients in the m basis
    if s.basis == M_SYM:
        m_coeffs = dict(s.terms)
    else:
        rows = table.to_m[s.basis]
        m_coeffs = {}
        for lam, poly in s.terms.items():
            for j, c in enumerate(rows[table.index[lam]]):
                if c:
                    mu = table.parts[j]
                    m_coeffs[mu] = m_coeffs.get(mu, TPoly.zero()) + poly * c
    if target == M_SYM:
        return SymElement(s.n, M_SYM, m_coeffs)
    rows = table.from_m[target]
    out: dict[tuple, TPoly] = {}
    for mu, poly in m_coeffs.items():
        for j, c in enumerate(rows[table.index[mu]]):
            if c:
                lam = table.parts[j]
                out[lam] = out.get(lam, TPoly.zero()) + poly * c
    return SymElement(s.n, target, out)


def omega_sym(s: SymElement) -> SymElement:
    """The involution exchanging elementary and homogeneous bases.

    On e/h it swaps the basis tag; on p it scales the lambda term by
    (-1)^(n - l(lambda)); on m it conjugates through the e basis.
    """
    if s.basis == E_SYM:
        return SymElement(s.n, H_SYM, s.terms)
    if s.basis == H_SYM:
        return SymElement(s.n, E_SYM, s.terms)
    if s.basis == P_SYM:
        return SymElement(
            s.n,
            P_SYM,
            ((lam, p * (-1) ** (s.n - len(lam))) for lam, p in s.terms.items()),
        )
    return convert(omega_sym(convert(s, E_SYM)), M_SYM)


# ---------------------------------------------------------------------------
# positivity / shape predicates
# ---------------------------------------------------------------------------

def is_b_positive(s: SymElement, basis: str) -> bool:
    """Every coefficient of every TPoly nonnegative, after conversion."""
    converted = convert(s, basis)
    return all(
        c >= 0 for poly in converted.terms.values() for c in poly.coeffs
    )


def is_palindromic_sym(s: SymElement, center) -> bool:
    """Every coefficient polynomial palindromic about the same center."""
    return all(is_palindromic(poly, center) for poly in s.terms.values())


def _t_layers(s: SymElement) -> list[dict[tuple, Fraction]]:
    top = max((poly.degree() for poly in s.terms.values()), default=-1)
    layers = []
    for j in range(top + 1):
        layers.append({lam: poly.coeff(j) for lam, poly in s.terms.items()})
    return layers


def is_e_unimodal(s: SymElement, num_edges: int | None = None) -> bool:
    """e-positivity of every t-layer and of consecutive layer differences
    up to the center.

    Writing the element as sum_j a_j t^j in the e basis, requires each a_j
    e-positive and a_(j+1) - a_j e-positive for j <= (num_edges - 1)/2.
    When `num_edges` is omitted it is inferred as min degree + max degree of
    the coefficient polynomials, which is correct for palindromic input.
    """
    e = convert(s, E_SYM)
    if e.is_zero:
        return True
    layers = _t_layers(e)
    if any(c < 0 for layer in layers for c in layer.values()):
        return False
    if num_edges is None:
        min_deg = min(
            next(j for j, c in enumerate(poly.coeffs) if c)
            for poly in e.terms.values()
        )
        max_deg = max(poly.degree() for poly in e.terms.values())
        num_edges = min_deg + max_deg
    keys = set(e.terms)

    def layer(j):
        return layers[j] if j < len(layers) else {}

    j = 0
    while 2 * j <= num_edges - 1:
        lower, upper = layer(j), layer(j + 1)
        if any(upper.get(lam, 0) - lower.get(lam, 0) < 0 for lam in keys):
            return False
        j += 1
    return True
