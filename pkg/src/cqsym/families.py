"""Digraph family constructors and their closed-form expansions.

Covers the directed path/cycle, complete digraphs, the circular family
G(n, r), digraphs built from circular interval sets and from proper circular
arcs, the cycle/path elementary-basis closed forms, the cycle power-sum
factorization, and the acyclic-orientation sink statistics that refine the
elementary expansions.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable

from .algebra import (
    TPoly,
    eulerian_poly,
    partitions_of,
    rearrangements_of,
    t_bracket,
)
from .chromatic import brute_force_x
from .digraph import (
    AcyclicOrientation,
    Digraph,
    acyclic_orientations,
    asc_relative,
    sink_count,
    underlying,
)
from .errors import BoundExceededError, NotSymmetricError
from .qsym import symmetric_witness
from .sym import E_SYM, SymElement

AO_EDGE_CAP = 22  # 2^|E| acyclic-orientation enumeration guard


# ---------------------------------------------------------------------------
# basic families
# ---------------------------------------------------------------------------

def directed_path(n: int) -> Digraph:
    """Edges (i, i+1) for 1 <= i < n."""
    if n < 1:
        raise ValueError("need n >= 1")
    return Digraph(n, ((i, i + 1) for i in range(1, n)))


def directed_cycle(n: int) -> Digraph:
    """The directed path plus the closing edge (n, 1); n >= 2."""
    if n < 2:
        raise ValueError("need n >= 2")
    return Digraph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_acyclic(n: int) -> Digraph:
    """All edges (i, j) with i < j."""
    if n < 1:
        raise ValueError("need n >= 1")
    return Digraph(
        n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    )


def complete_double(n: int) -> Digraph:
    """All ordered pairs (i, j), i != j."""
    if n < 1:
        raise ValueError("need n >= 1")
    return Digraph(
        n, ((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)
    )


def g_c(n: int, r: int) -> Digraph:
    """Circular family: edge (i, j) iff 0 < (j - i) mod n < r.

    g_c(n, 1) is edgeless, g_c(n, 2) the directed cycle, g_c(n, n) the
    complete double digraph.
    """
    if n < 1 or not 1 <= r <= n:
        raise ValueError(f"need n >= 1 and 1 <= r <= n, got n={n}, r={r}")
    return Digraph(
        n,
        (
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if 0 < (j - i) % n < r
        ),
    )


# ---------------------------------------------------------------------------
# circular intervals
# ---------------------------------------------------------------------------

def circular_interval(a: int, b: int, n: int) -> tuple[int, ...]:
    """The cyclically consecutive run from a to b in 1..n (wraps when a > b)."""
    size = (b - a) % n + 1
    return tuple((a - 1 + i) % n + 1 for i in range(size))


class CircularIntervalSet:
    """A set of circular intervals [a, b] of 1..n."""

    __slots__ = ("n", "intervals")

    def __init__(self, n: int, intervals: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("need n >= 1")
        ivs = frozenset((int(a), int(b)) for a, b in intervals)
        for a, b in ivs:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"interval [{a},{b}] outside 1..{n}")
        self.n = n
        self.intervals = ivs

    def member_sets(self) -> list[frozenset[int]]:
        return [frozenset(circular_interval(a, b, self.n)) for a, b in self.intervals]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CircularIntervalSet)
            and self.n == other.n
            and self.intervals == other.intervals
        )

    def __hash__(self) -> int:
        return hash((self.n, self.intervals))

    def __repr__(self) -> str:
        return f"CircularIntervalSet({self.n}, {sorted(self.intervals)})"

    def to_json(self) -> dict:
        return {"n": self.n, "intervals": [list(iv) for iv in sorted(self.intervals)]}

    @classmethod
    def from_json(cls, data) -> CircularIntervalSet:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), ((int(a), int(b)) for a, b in data["intervals"]))


def from_circular_intervals(ivs: CircularIntervalSet) -> Digraph:
    """Edge (i, j) iff the circular interval [i, j] sits inside a member."""
    n = ivs.n
    members = ivs.member_sets()
    edges = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            run = frozenset(circular_interval(i, j, n))
            if any(run <= m for m in members):
                edges.append((i, j))
    return Digraph(n, edges)


def normalize_intervals(ivs: CircularIntervalSet) -> CircularIntervalSet:
    """One interval [i, c_i] per left endpoint: the largest one contained in
    a member (falling back to the singleton [i, i])."""
    n = ivs.n
    members = ivs.member_sets()
    out = []
    for i in range(1, n + 1):
        best = i
        for gap in range(n - 1, 0, -1):
            c = (i - 1 + gap) % n + 1
            run = frozenset(circular_interval(i, c, n))
            if any(run <= m for m in members):
                best = c
                break
        out.append((i, best))
    return CircularIntervalSet(n, out)


# ---------------------------------------------------------------------------
# proper circular arcs
# ---------------------------------------------------------------------------

class ArcFamily:
    """Arcs on the unit circle as (start, extent) pairs of exact rationals,
    angles measured as fractions of a full turn; no arc properly contains
    another."""

    __slots__ = ("arcs",)

    def __init__(self, arcs: Iterable[tuple]):
        normalized = []
        for start, extent in arcs:
            start = Fraction(start) % 1
            extent = Fraction(extent)
            if not 0 < extent <= 1:
                raise ValueError(f"arc extent must be in (0, 1], got {extent}")
            normalized.append((start, extent))
        self.arcs = tuple(normalized)
        k = len(self.arcs)
        for i in range(k):
            for j in range(k):
                if i != j and self._contains(i, j) and not self._contains(j, i):
                    raise ValueError(
                        f"arc {i + 1} properly contains arc {j + 1}"
                    )

    def _contains(self, i: int, j: int) -> bool:
        si, ei = self.arcs[i]
        sj, ej = self.arcs[j]
        return (sj - si) % 1 + ej <= ei

    @property
    def n(self) -> int:
        return len(self.arcs)

    def __repr__(self) -> str:
        return f"ArcFamily({list(self.arcs)})"

    def to_json(self) -> dict:
        return {
            "arcs": [
                {"start": str(s), "extent": str(e)} for s, e in self.arcs
            ]
        }

    @classmethod
    def from_json(cls, data) -> ArcFamily:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            (Fraction(a["start"]), Fraction(a["extent"])) for a in data["arcs"]
        )


def from_arcs(family: ArcFamily) -> Digraph:
    """Edge u -> v iff arc v's starting point lies strictly inside arc u."""
    n = family.n
    edges = []
    for i in range(n):
        si, ei = family.arcs[i]
        for j in range(n):
            if i == j:
                continue
            sj = family.arcs[j][0]
            offset = (sj - si) % 1
            if 0 < offset < ei:
                edges.append((i + 1, j + 1))
    return Digraph(n, edges)


def arcs_from_intervals(ivs: CircularIntervalSet) -> ArcFamily:
    """Arcs realizing a circular interval set: point i sits at angle (i-1)/n,
    the arc for [i, c_i] runs from slightly before i to slightly after c_i,
    with arcs of smaller intervals nudged slightly further (offsets on a
    1/(4n) scale) so that no arc properly contains another."""
    n = ivs.n
    normalized = sorted(normalize_intervals(ivs).intervals)
    gaps = {i: (c - i) % n for i, c in normalized}
    by_size = sorted(gaps, key=lambda i: (-gaps[i], i))
    eps = {i: Fraction(rank + 1, 4 * n * (n + 1)) for rank, i in enumerate(by_size)}
    arcs = []
    for i in range(1, n + 1):
        start = (Fraction(i - 1, n) - Fraction(1, 4 * n)) % 1
        extent = Fraction(gaps[i], n) + Fraction(1, 4 * n) + eps[i]
        arcs.append((start, extent))
    return ArcFamily(arcs)


# ---------------------------------------------------------------------------
# closed-form expansions
# ---------------------------------------------------------------------------

def _shifted_bracket(k: int) -> TPoly:
    """t * [k]_t."""
    return t_bracket(k).shifted(1)


def cycle_e_expansion(n: int) -> SymElement:
    """Elementary expansion of X for the directed cycle:
    the e_lambda coefficient is the sum over rearrangements mu of lambda of
    mu_1 * prod_i t[mu_i - 1]_t.  Any part equal to 1 kills its term."""
    if n < 2:
        raise ValueError("need n >= 2")
    terms = {}
    for lam in partitions_of(n):
        acc = TPoly.zero()
        for mu in rearrangements_of(lam):
            term = TPoly((mu[0],))
            for part in mu:
                term = term * _shifted_bracket(part - 1)
            acc = acc + term
        if acc:
            terms[lam] = acc
    return SymElement(n, E_SYM, terms)


def path_e_expansion(n: int) -> SymElement:
    """Elementary expansion of X for the directed path:
    the e_lambda coefficient sums [mu_1]_t * prod_(i>=2) t[mu_i - 1]_t."""
    if n < 1:
        raise ValueError("need n >= 1")
    terms = {}
    for lam in partitions_of(n):
        acc = TPoly.zero()
        for mu in rearrangements_of(lam):
            term = t_bracket(mu[0])
            for part in mu[1:]:
                term = term * _shifted_bracket(part - 1)
            acc = acc + term
        if acc:
            terms[lam] = acc
    return SymElement(n, E_SYM, terms)


def cycle_p_coefficient(n: int, lam) -> TPoly:
    """z_lambda times the p_lambda coefficient of omega X for the directed
    cycle: n t [n-1]_t when lambda = (n), else
    n t A_(k-1)(t) prod_i [lambda_i]_t with k parts."""
    lam = tuple(lam)
    if sum(lam) != n or any(
        lam[i] < lam[i + 1] for i in range(len(lam) - 1)
    ) or (lam and lam[-1] < 1):
        raise ValueError(f"{lam} is not a partition of {n}")
    if lam == (n,):
        return _shifted_bracket(n - 1) * n
    out = eulerian_poly(len(lam) - 1).shifted(1) * n
    for part in lam:
        out = out * t_bracket(part)
    return out


def gc_closed_form(n: int, r: int) -> SymElement:
    """Closed elementary expansions for g_c(n, r), r in {1, 2, n-1, n}."""
    if n < 1 or not 1 <= r <= n:
        raise ValueError(f"need n >= 1 and 1 <= r <= n, got n={n}, r={r}")
    if r == 1:
        # edgeless: (x_1 + x_2 + ...)^n
        return SymElement(n, E_SYM, {(1,) * n: TPoly.one()})
    if r == 2:
        return cycle_e_expansion(n)
    binom = math.comb(n, 2)
    if r == n:
        return SymElement(
            n, E_SYM, {(n,): TPoly.monomial(binom, math.factorial(n))}
        )
    if r == n - 1:
        poly = eulerian_poly(n - 1).shifted(binom - n + 1) * n
        return SymElement(n, E_SYM, {(n,): poly})
    raise ValueError(f"no closed form for r={r} (only 1, 2, n-1, n)")


# ---------------------------------------------------------------------------
# acyclic-orientation refinements
# ---------------------------------------------------------------------------

def _checked_orientations(d: Digraph):
    g = underlying(d)
    if g.edge_count > AO_EDGE_CAP:
        raise BoundExceededError(
            f"{g.edge_count} edges exceeds the orientation enumeration cap"
        )
    return g, acyclic_orientations(g)


def ao_sink_sum(d: Digraph, check_symmetric: bool = True) -> dict[int, TPoly]:
    """For each k, the sum of t^(edges agreeing with d) over acyclic
    orientations of the underlying graph with exactly k sinks; equals the sum
    of e-expansion coefficients over partitions with k parts."""
    if check_symmetric:
        witness = symmetric_witness(brute_force_x(d))
        if witness is not None:
            raise NotSymmetricError(*witness)
    _, orientations = _checked_orientations(d)
    acc: dict[int, list[int]] = {}
    top = d.edge_count
    for a in orientations:
        k = sink_count(a)
        row = acc.get(k)
        if row is None:
            row = acc[k] = [0] * (top + 1)
        row[asc_relative(a, d)] += 1
    return {k: TPoly(row) for k, row in sorted(acc.items())}


def _sink_gap_partition(n: int, orientation: AcyclicOrientation) -> tuple[int, ...]:
    """Numbers of vertices strictly between circularly consecutive sinks
    (labels read around the circle 1..n), each bumped by one, sorted."""
    sinks = sorted(
        v
        for v in range(1, n + 1)
        if all(e[0] != v for e in orientation.edges)
    )
    k = len(sinks)
    gaps = [sinks[i + 1] - sinks[i] - 1 for i in range(k - 1)]
    gaps.append(sinks[0] + n - sinks[-1] - 1)
    return tuple(sorted((g + 1 for g in gaps), reverse=True))


def _ao_refinement(d: Digraph) -> dict[tuple, TPoly]:
    n = d.n
    _, orientations = _checked_orientations(d)
    acc: dict[tuple, list[int]] = {}
    top = d.edge_count
    for a in orientations:
        lam = _sink_gap_partition(n, a)
        row = acc.get(lam)
        if row is None:
            row = acc[lam] = [0] * (top + 1)
        row[asc_relative(a, d)] += 1
    return {lam: TPoly(row) for lam, row in sorted(acc.items())}


def cycle_ao_refinement(n: int) -> dict[tuple, TPoly]:
    """Partition -> sum of t^(agreeing edges) over acyclic orientations of
    the cycle whose consecutive-sink gaps realize the partition; matches the
    cycle e-expansion coefficient by coefficient."""
    if n < 2:
        raise ValueError("need n >= 2")
    return _ao_refinement(directed_cycle(n))


def path_ao_refinement(n: int) -> dict[tuple, TPoly]:
    """Same statistic for the directed path; the sink sequence is read
    circularly on the labels, so the largest- and smallest-labeled sinks are
    consecutive."""
    if n < 1:
        raise ValueError("need n >= 1")
    return _ao_refinement(directed_path(n))
