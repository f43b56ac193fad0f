"""The engine: chromatic quasisymmetric functions of digraphs.

Computes X(x, t) = sum over proper colorings of t^(ascents) x_kappa three
independent ways (brute-force coloring enumeration, the permutation-statistic
F-basis expansion, and the power-sum expansion for symmetric X), plus the
t-analog chromatic polynomial and the color-swap involution behind the
symmetry theorem.

An ascent of a coloring is a directed edge (u, v) with kappa(u) < kappa(v).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator

from .algebra import TPoly, partitions_of, z_lambda
from .digraph import (
    Digraph,
    UndirectedGraph,
    component_vertex_sets,
    contains_forbidden,
    relabel,
    underlying,
)
from .errors import BoundExceededError, NotSymmetricError
from .qsym import F_BASIS, M_BASIS, QSymElement, symmetric_witness
from .sym import P_SYM, SymElement

COLORING_CAP = 8  # brute-force coloring enumeration
PERM_CAP = 9  # n! permutation loops
CHROMATIC_NODE_LIMIT = 20_000_000  # m^n guard for direct chi enumeration


# ---------------------------------------------------------------------------
# colorings
# ---------------------------------------------------------------------------

def is_proper(d: Digraph, colors: Iterable[int]) -> bool:
    cs = tuple(colors)
    if len(cs) != d.n or any(c < 1 for c in cs):
        return False
    return all(cs[u - 1] != cs[v - 1] for u, v in d.edges)


def _check_proper(d: Digraph, colors) -> tuple[int, ...]:
    cs = tuple(int(c) for c in colors)
    if not is_proper(d, cs):
        raise ValueError(f"not a proper coloring of the digraph: {cs}")
    return cs


def ascent_count(d: Digraph, colors: Iterable[int]) -> int:
    """Directed edges (u, v) with kappa(u) < kappa(v)."""
    cs = _check_proper(d, colors)
    return sum(1 for u, v in d.edges if cs[u - 1] < cs[v - 1])


def descent_count(d: Digraph, colors: Iterable[int]) -> int:
    """Directed edges (u, v) with kappa(u) > kappa(v)."""
    cs = _check_proper(d, colors)
    return sum(1 for u, v in d.edges if cs[u - 1] > cs[v - 1])


def brute_force_x(d: Digraph, cap: int = COLORING_CAP) -> QSymElement:
    """X(x, t) in the monomial basis, by enumerating surjective colorings.

    The coefficient of M_alpha (alpha with k parts) collects t^(ascents)
    over proper colorings onto the initial color segment {1..k} with exactly
    alpha_i vertices of color i; homogeneity makes that the whole function.
    """
    n = d.n
    if n > cap:
        raise BoundExceededError(f"brute force capped at {cap} vertices, got {n}")
    und_adj = [0] * (n + 1)
    for u, v in underlying(d).edges:
        und_adj[u] |= 1 << (v - 1)
        und_adj[v] |= 1 << (u - 1)
    in_mask = [0] * (n + 1)
    for u, v in d.edges:
        in_mask[v] |= 1 << (u - 1)
    full = (1 << n) - 1

    independent = [True] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length()  # 1-based lowest vertex
        rest = mask & (mask - 1)
        independent[mask] = independent[rest] and not (und_adj[low] & rest)

    max_asc = d.edge_count
    acc: dict[tuple, list[int]] = {}

    def members(mask: int) -> Iterator[int]:
        while mask:
            low = mask & -mask
            yield low.bit_length()
            mask ^= low

    def rec(remaining: int, placed: int, comp: tuple, asc: int):
        if not remaining:
            row = acc.get(comp)
            if row is None:
                row = acc[comp] = [0] * (max_asc + 1)
            row[asc] += 1
            return
        sub = remaining
        while sub:
            if independent[sub]:
                gained = sum(
                    (in_mask[v] & placed).bit_count() for v in members(sub)
                )
                rec(
                    remaining ^ sub,
                    placed | sub,
                    comp + (sub.bit_count(),),
                    asc + gained,
                )
            sub = (sub - 1) & remaining

    rec(full, 0, (), 0)
    return QSymElement(n, M_BASIS, ((k, TPoly(v)) for k, v in acc.items()))


# ---------------------------------------------------------------------------
# permutation statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PermStats:
    """Graph statistics of one permutation: per-position rank, descent set,
    inversion count."""

    sigma: tuple[int, ...]
    ranks: tuple[int, ...]  # rank of sigma_i at index i-1
    gdes: frozenset[int]
    ginv: int


def _ranks_and_descents(adj: list[set[int]], sigma: tuple[int, ...]):
    """Rank of each letter = 1 + max rank of an earlier adjacent letter.

    A descent sits at i when the rank drops from position i to i+1, or ties
    with sigma_i > sigma_(i+1).
    """
    n = len(sigma)
    rank_of = [0] * (len(adj))
    ranks = []
    for x in sigma:
        best = 0
        for y in adj[x]:
            r = rank_of[y]
            if r > best:
                best = r
        rank_of[x] = best + 1
        ranks.append(best + 1)
    des = []
    for i in range(n - 1):
        if ranks[i] > ranks[i + 1] or (
            ranks[i] == ranks[i + 1] and sigma[i] > sigma[i + 1]
        ):
            des.append(i + 1)
    return ranks, des


def _inversions(edges, position: dict[int, int]) -> int:
    return sum(1 for u, v in edges if position[u] > position[v])


def perm_stats(d: Digraph, sigma: Iterable[int]) -> PermStats:
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, d.n + 1)):
        raise ValueError(f"not a permutation of 1..{d.n}: {sigma}")
    adj = underlying(d).adjacency()
    ranks, des = _ranks_and_descents(adj, sigma)
    position = {x: i for i, x in enumerate(sigma)}
    return PermStats(sigma, tuple(ranks), frozenset(des), _inversions(d.edges, position))


def _descent_inv_table(
    d: Digraph, cap: int, chunk_size: int = 40320
) -> dict[tuple, Counter]:
    """Map descent set (sorted tuple) -> Counter of inversion counts,
    over all of S_n.

    The permutation loop is split into fixed-size chunks accumulated
    independently and merged by exact addition, so the result does not
    depend on the chunking (workers may split it arbitrarily).
    """
    n = d.n
    if n > cap:
        raise BoundExceededError(f"permutation loop capped at {cap}, got {n}")
    adj = underlying(d).adjacency()
    edges = tuple(d.edges)

    def accumulate(perms) -> dict[tuple, Counter]:
        out: dict[tuple, Counter] = {}
        position = {}
        for sigma in perms:
            ranks, des = _ranks_and_descents(adj, sigma)
            for i, x in enumerate(sigma):
                position[x] = i
            inv = _inversions(edges, position)
            key = tuple(des)
            c = out.get(key)
            if c is None:
                c = out[key] = Counter()
            c[inv] += 1
        return out

    perms = itertools.permutations(range(1, n + 1))
    merged: dict[tuple, Counter] = {}
    while True:
        chunk = list(itertools.islice(perms, chunk_size))
        if not chunk:
            break
        for key, counter in accumulate(chunk).items():
            if key in merged:
                merged[key].update(counter)
            else:
                merged[key] = counter
    return merged


def _counter_poly(counter: Counter) -> TPoly:
    row = [0] * (max(counter) + 1)
    for exp, cnt in counter.items():
        row[exp] = cnt
    return TPoly(row)


def x_via_f_theorem(d: Digraph, cap: int = PERM_CAP) -> QSymElement:
    """X(x, t) in the F basis: sum over permutations of
    F_(n, S(sigma)) * t^(inversions), where S(sigma) is the image of the
    complement of the descent set under i -> n - i.

    The reflection matters: complementing alone reproduces X only when X is
    symmetric, and this expansion must match the coloring oracle exactly for
    every digraph.
    """
    n = d.n
    table = _descent_inv_table(d, cap)
    terms = {}
    for des, counter in table.items():
        des_set = set(des)
        key = tuple(sorted(n - i for i in range(1, n) if i not in des_set))
        terms[key] = _counter_poly(counter)
    return QSymElement(n, F_BASIS, terms)


def omega_x_via_f_theorem(d: Digraph, cap: int = PERM_CAP) -> QSymElement:
    """The companion expansion indexed by the descent sets themselves.

    When X is symmetric this equals omega_f of x_via_f_theorem (F-coefficients
    of a symmetric element are invariant under subset reflection); for
    non-symmetric X the two differ by exactly that reflection.
    """
    table = _descent_inv_table(d, cap)
    return QSymElement(
        d.n, F_BASIS, ((des, _counter_poly(c)) for des, c in table.items())
    )


def relabel_invariance_check(d: Digraph, perm: Iterable[int]) -> bool:
    """The F expansion is independent of the vertex labeling."""
    return x_via_f_theorem(d) == x_via_f_theorem(relabel(d, perm))


# ---------------------------------------------------------------------------
# power-sum expansion
# ---------------------------------------------------------------------------

def _block_bounds(lam: tuple[int, ...]) -> list[tuple[int, int]]:
    """1-based [start, end] positions of the contiguous blocks of sizes lam."""
    bounds = []
    s = 0
    for part in lam:
        bounds.append((s + 1, s + part))
        s += part
    return bounds


def _member(adj, sigma, des_set, bounds) -> bool:
    for start, end in bounds:
        for i in range(start, end):
            if i in des_set:
                return False
        for j in range(start + 1, end + 1):
            x = sigma[j - 1]
            if not any(sigma[p - 1] in adj[x] for p in range(start, j)):
                return False
    return True


def n_lambda_member(g: UndirectedGraph, sigma: Iterable[int], lam) -> bool:
    """Membership in N_lambda: split sigma into contiguous blocks of sizes
    lam; no block may contain a descent of sigma or a letter with no earlier
    adjacent letter in its own block."""
    sigma = tuple(int(x) for x in sigma)
    lam = tuple(lam)
    if sum(lam) != g.n:
        raise ValueError(f"{lam} is not a partition of {g.n}")
    adj = g.adjacency()
    _, des = _ranks_and_descents(adj, sigma)
    return _member(adj, sigma, set(des), _block_bounds(lam))


def p_expansion_theorem(
    d: Digraph, cap: int = PERM_CAP, assume_symmetric: bool = False
) -> SymElement:
    """omega X in the power-sum basis: the p_lambda coefficient is
    z_lambda^(-1) sum over N_lambda of t^(inversions).

    Rejects digraphs with non-symmetric X unless `assume_symmetric` is set
    (the output is then a formal expansion with no meaning guarantee).
    """
    n = d.n
    if n > cap:
        raise BoundExceededError(f"permutation loop capped at {cap}, got {n}")
    if not assume_symmetric:
        witness = symmetric_witness(brute_force_x(d))
        if witness is not None:
            raise NotSymmetricError(*witness)
    adj = underlying(d).adjacency()
    edges = tuple(d.edges)
    lams = partitions_of(n)
    bounds = [_block_bounds(lam) for lam in lams]
    counters = [Counter() for _ in lams]
    position = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        ranks, des = _ranks_and_descents(adj, sigma)
        des_set = set(des)
        for i, x in enumerate(sigma):
            position[x] = i
        inv = _inversions(edges, position)
        for idx, lam in enumerate(lams):
            if _member(adj, sigma, des_set, bounds[idx]):
                counters[idx][inv] += 1
    terms = {}
    for lam, counter in zip(lams, counters):
        if counter:
            terms[lam] = _counter_poly(counter) * Fraction(1, z_lambda(lam))
    return SymElement(n, P_SYM, terms)


# ---------------------------------------------------------------------------
# t-analog chromatic polynomial
# ---------------------------------------------------------------------------

def t_chromatic(d: Digraph, m: int, node_limit: int = CHROMATIC_NODE_LIMIT) -> TPoly:
    """Sum of t^(ascents) over proper colorings with colors in {1..m},
    by direct enumeration (guarded by m^n)."""
    n = d.n
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > 1 and m**n > node_limit:
        raise BoundExceededError(f"{m}^{n} exceeds the enumeration limit")
    if m == 0:
        return TPoly.zero()
    # for vertex v: constraints against already-colored u < v
    earlier: list[list[tuple[int, bool]]] = [[] for _ in range(n + 1)]
    for u, v in d.edges:
        if u < v:
            earlier[v].append((u, True))  # ascent iff color(u) < color(v)
        else:
            earlier[u].append((v, False))  # ascent iff color(u) < color(v), v later
    counts = [0] * (d.edge_count + 1)
    colors = [0] * (n + 1)

    def rec(v: int, asc: int):
        if v > n:
            counts[asc] += 1
            return
        for c in range(1, m + 1):
            gained = 0
            ok = True
            for u, forward in earlier[v]:
                cu = colors[u]
                if cu == c:
                    ok = False
                    break
                if forward:
                    if cu < c:
                        gained += 1
                elif c < cu:
                    gained += 1
            if ok:
                colors[v] = c
                rec(v + 1, asc + gained)
        colors[v] = 0

    rec(1, 0)
    return TPoly(counts)


def delta_table(d: Digraph, cap: int = PERM_CAP) -> dict[tuple[int, int], int]:
    """(k, l) -> number of permutations with k descents and l inversions."""
    table = _descent_inv_table(d, cap)
    out: dict[tuple[int, int], int] = {}
    for des, counter in table.items():
        k = len(des)
        for inv, cnt in counter.items():
            out[(k, inv)] = out.get((k, inv), 0) + cnt
    return out


def _shifted_binomial(x: Fraction, n: int) -> Fraction:
    prod = Fraction(1)
    for i in range(n):
        prod *= x - i
    return prod / factorial(n)


def delta_chi(d: Digraph, m, cap: int = PERM_CAP) -> TPoly:
    """chi(m, t) = sum over (k, l) of delta(k, l) * binom(m + k, n) * t^l,
    valid as a polynomial identity in m (rational m allowed)."""
    x = Fraction(m)
    coeffs: dict[int, Fraction] = {}
    for (k, inv), cnt in delta_table(d, cap).items():
        w = _shifted_binomial(x + k, d.n) * cnt
        if w:
            coeffs[inv] = coeffs.get(inv, Fraction(0)) + w
    if not coeffs:
        return TPoly.zero()
    row = [Fraction(0)] * (max(coeffs) + 1)
    for exp, c in coeffs.items():
        row[exp] = c
    return TPoly(row)


def t_chromatic_via_delta(d: Digraph, m: int, cap: int = PERM_CAP) -> TPoly:
    if m < 0:
        raise ValueError("m must be nonnegative")
    return delta_chi(d, m, cap)


# ---------------------------------------------------------------------------
# the color-swap involution
# ---------------------------------------------------------------------------

def phi_a(
    d: Digraph, colors: Iterable[int], a: int, check_forbidden: bool = True
) -> tuple[int, ...]:
    """Swap the number of occurrences of colors a and a+1 while preserving
    ascents: flip a <-> a+1 on the odd-path components of the subdigraph
    induced by those two colors.

    Requires a digraph free of the five forbidden triples, which guarantees
    every such component is a directed path or an even directed cycle.
    """
    cs = _check_proper(d, colors)
    if a < 1:
        raise ValueError("colors are positive integers")
    if check_forbidden and contains_forbidden(d):
        raise ValueError("digraph contains a forbidden induced triple")
    chosen = {v for v in range(1, d.n + 1) if cs[v - 1] in (a, a + 1)}
    if not chosen:
        return cs
    sub_edges = [(u, v) for u, v in d.edges if u in chosen and v in chosen]
    out = dict.fromkeys(chosen, 0)
    inn = dict.fromkeys(chosen, 0)
    for u, v in sub_edges:
        out[u] += 1
        inn[v] += 1
    edge_set = set(sub_edges)
    new_colors = list(cs)
    for comp in _restricted_components(chosen, sub_edges):
        k = len(comp)
        n_edges = sum(1 for u, v in edge_set if u in comp)
        if n_edges == k and all(out[v] == 1 and inn[v] == 1 for v in comp):
            if k % 2:
                raise ValueError("odd directed cycle; forbidden-free hypothesis fails")
            continue  # even cycle: fixed
        if n_edges == k - 1 and all(out[v] <= 1 and inn[v] <= 1 for v in comp):
            if k % 2:  # odd path: swap the two colors
                for v in comp:
                    new_colors[v - 1] = 2 * a + 1 - cs[v - 1]
            continue
        raise ValueError(
            "color-pair component is neither a directed path nor an even "
            "directed cycle; forbidden-free hypothesis fails"
        )
    return tuple(new_colors)


def _restricted_components(vertices: set[int], edges) -> list[set[int]]:
    top = max(vertices)
    comps = component_vertex_sets(top, edges)
    return [set(c) for c in comps if c[0] in vertices]
