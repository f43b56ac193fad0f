"""Directed graphs on vertices 1..n, their underlying graphs, forbidden
triple detection, and acyclic orientation enumeration."""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Iterator


class Digraph:
    """Loop-free digraph on 1..n; at most one edge per ordered pair.

    Both (u, v) and (v, u) may be present (a double edge); |E| counts them
    separately.  Immutable and hashable.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("need at least one vertex")
        es = frozenset((int(u), int(v)) for u, v in edges)
        for u, v in es:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside 1..{n}")
        self.n = n
        self.edges: frozenset[tuple[int, int]] = es

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def reverse(self) -> Digraph:
        return Digraph(self.n, ((v, u) for u, v in self.edges))

    def out_neighbors(self) -> list[set[int]]:
        """Index v (1-based) -> set of w with (v, w) an edge; index 0 unused."""
        out = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            out[u].add(v)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Digraph({self.n}, {self.sorted_edges()})"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data) -> Digraph:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), ((int(u), int(v)) for u, v in data["edges"]))


class UndirectedGraph:
    """Simple undirected graph on 1..n; edges stored as (u, v) with u < v."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("need at least one vertex")
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside 1..{n}")
            es.add((min(u, v), max(u, v)))
        self.n = n
        self.edges: frozenset[tuple[int, int]] = frozenset(es)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph({self.n}, {sorted(self.edges)})"


class AcyclicOrientation:
    """One direction per edge of a base graph, with no directed cycle."""

    __slots__ = ("base", "edges")

    def __init__(self, base: UndirectedGraph, edges: Iterable[tuple[int, int]]):
        es = frozenset((int(u), int(v)) for u, v in edges)
        undirected = {(min(u, v), max(u, v)) for u, v in es}
        if undirected != set(base.edges) or len(es) != base.edge_count:
            raise ValueError("orientation does not match the base edge set")
        if _has_directed_cycle(base.n, es):
            raise ValueError("orientation contains a directed cycle")
        self.base = base
        self.edges = es

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AcyclicOrientation)
            and self.base == other.base
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.base, self.edges))

    def __repr__(self) -> str:
        return f"AcyclicOrientation({self.base!r}, {sorted(self.edges)})"


def _has_directed_cycle(n: int, edges: frozenset) -> bool:
    out = [[] for _ in range(n + 1)]
    indeg = [0] * (n + 1)
    for u, v in edges:
        out[u].append(v)
        indeg[v] += 1
    queue = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen != n


def underlying(d: Digraph) -> UndirectedGraph:
    """Forget orientations; a double edge collapses to one undirected edge."""
    return UndirectedGraph(d.n, d.edges)


# ---------------------------------------------------------------------------
# forbidden induced triples
# ---------------------------------------------------------------------------

# The five 3-vertex patterns whose absence (as induced subdigraphs) forces a
# symmetric chromatic quasisymmetric function: a middle vertex b joined to two
# nonadjacent vertices a, c by out/out, in/in, double+out, double+in, or
# double+double edges.
_FORBIDDEN_PATTERNS = (
    frozenset({(2, 1), (2, 3)}),          # out, out
    frozenset({(1, 2), (3, 2)}),          # in, in
    frozenset({(1, 2), (2, 1), (2, 3)}),  # double, out
    frozenset({(1, 2), (2, 1), (3, 2)}),  # double, in
    frozenset({(1, 2), (2, 1), (2, 3), (3, 2)}),  # double, double
)


def _triple_canon(edges: frozenset) -> frozenset:
    best = None
    for perm in itertools.permutations((1, 2, 3)):
        relabeled = frozenset((perm[u - 1], perm[v - 1]) for u, v in edges)
        key = tuple(sorted(relabeled))
        if best is None or key < best[0]:
            best = (key, relabeled)
    return best[1]


_FORBIDDEN_CANON = frozenset(_triple_canon(p) for p in _FORBIDDEN_PATTERNS)


def contains_forbidden(d: Digraph) -> bool:
    """True iff some induced 3-vertex subdigraph is one of the five patterns."""
    if d.n < 3:
        return False
    by_vertex = [[] for _ in range(d.n + 1)]
    for u, v in d.edges:
        by_vertex[u].append((u, v))
        by_vertex[v].append((u, v))
    for trip in itertools.combinations(range(1, d.n + 1), 3):
        ts = set(trip)
        induced_edges = frozenset(
            e for v in trip for e in by_vertex[v] if e[0] in ts and e[1] in ts
        )
        if len(induced_edges) not in (2, 3, 4):
            continue
        pos = {v: i + 1 for i, v in enumerate(trip)}
        mapped = frozenset((pos[u], pos[v]) for u, v in induced_edges)
        if _triple_canon(mapped) in _FORBIDDEN_CANON:
            return True
    return False


# ---------------------------------------------------------------------------
# acyclic orientations
# ---------------------------------------------------------------------------

def acyclic_orientations(g: UndirectedGraph) -> Iterator[AcyclicOrientation]:
    """All acyclic orientations, by backtracking with incremental cycle checks.

    Deterministic order: edges sorted, forward direction tried first.
    """
    edges = sorted(g.edges)
    out = [set() for _ in range(g.n + 1)]

    def reaches(src: int, dst: int) -> bool:
        stack = [src]
        seen = {src}
        while stack:
            v = stack.pop()
            if v == dst:
                return True
            for w in out[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    chosen: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[AcyclicOrientation]:
        if i == len(edges):
            yield AcyclicOrientation(g, tuple(chosen))
            return
        a, b = edges[i]
        for u, v in ((a, b), (b, a)):
            # u -> v closes a cycle iff v already reaches u
            if not reaches(v, u):
                out[u].add(v)
                chosen.append((u, v))
                yield from rec(i + 1)
                chosen.pop()
                out[u].remove(v)

    return rec(0)


def sink_count(a: AcyclicOrientation) -> int:
    """Vertices with no outgoing edge (isolated vertices count)."""
    has_out = {u for u, _ in a.edges}
    return a.base.n - len(has_out)


def asc_relative(a: AcyclicOrientation, d: Digraph) -> int:
    """Number of directed edges of d oriented as in a.

    For a double edge of d exactly one direction agrees.
    """
    if a.base != underlying(d):
        raise ValueError("orientation base does not match the digraph")
    return sum(1 for e in d.edges if e in a.edges)


# ---------------------------------------------------------------------------
# components, induced subdigraphs, relabeling
# ---------------------------------------------------------------------------

def component_vertex_sets(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    """Vertex sets of undirected components, each sorted, ordered by minimum."""
    adj = [set() for _ in range(n + 1)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = [False] * (n + 1)
    comps = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def connected_components(d: Digraph) -> list[Digraph]:
    """Induced subdigraphs on the undirected components, labels compressed."""
    return [induced(d, comp) for comp in component_vertex_sets(d.n, d.edges)]


def induced(d: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subdigraph on the given vertices, relabeled order-preservingly to 1..k."""
    vs = sorted(set(int(v) for v in vertices))
    if not vs:
        raise ValueError("empty vertex set")
    if vs[0] < 1 or vs[-1] > d.n:
        raise ValueError(f"vertices outside 1..{d.n}: {vs}")
    pos = {v: i + 1 for i, v in enumerate(vs)}
    keep = set(vs)
    return Digraph(
        len(vs),
        ((pos[u], pos[v]) for u, v in d.edges if u in keep and v in keep),
    )


def relabel(d: Digraph, perm: Iterable[int]) -> Digraph:
    """Apply a bijection of 1..n given in one-line notation (perm[i-1] = image of i)."""
    p = tuple(int(x) for x in perm)
    if sorted(p) != list(range(1, d.n + 1)):
        raise ValueError(f"not a permutation of 1..{d.n}: {p}")
    return Digraph(d.n, ((p[u - 1], p[v - 1]) for u, v in d.edges))
