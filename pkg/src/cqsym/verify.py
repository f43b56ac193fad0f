"""Verification suites: each suite re-derives one of the library's theorem
identities over an enumerated universe of digraphs and reports exact
pass/fail results with counterexample payloads.

Suites are split into coarse independent items so a runner may fan them out
across worker processes; result merging is order-independent.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .algebra import (
    TPoly,
    eulerian_poly,
    eulerian_poly_by_enumeration,
    is_palindromic,
    partitions_of,
    z_lambda,
)
from .chromatic import (
    ascent_count,
    brute_force_x,
    delta_table,
    is_proper,
    omega_x_via_f_theorem,
    p_expansion_theorem,
    perm_stats,
    relabel_invariance_check,
    phi_a,
    t_chromatic,
    t_chromatic_via_delta,
    x_via_f_theorem,
)
from .digraph import Digraph, acyclic_orientations, contains_forbidden, underlying
from .families import (
    CircularIntervalSet,
    ao_sink_sum,
    arcs_from_intervals,
    cycle_ao_refinement,
    cycle_e_expansion,
    cycle_p_coefficient,
    directed_cycle,
    directed_path,
    from_arcs,
    from_circular_intervals,
    g_c,
    gc_closed_form,
    normalize_intervals,
    path_ao_refinement,
    path_e_expansion,
)
from .qsym import (
    QSymElement,
    f_to_m,
    is_symmetric,
    rho,
    specialize_ones,
    to_monomial_symmetric,
)
from .sym import convert, is_b_positive, is_e_unimodal, is_palindromic_sym, omega_sym


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    checked: int
    detail: dict | None = None

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
        }
        if self.detail is not None:
            out["detail"] = self.detail
        return out


# ---------------------------------------------------------------------------
# digraph universes
# ---------------------------------------------------------------------------

def all_digraphs(n: int):
    """Every loop-free digraph on the labeled vertex set 1..n."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for states in itertools.product(range(4), repeat=len(pairs)):
        edges = []
        for (u, v), s in zip(pairs, states):
            if s in (1, 3):
                edges.append((u, v))
            if s in (2, 3):
                edges.append((v, u))
        yield Digraph(n, edges)


@lru_cache(maxsize=None)
def _undirected_classes(n: int):
    """Representative edge sets of undirected graphs on 1..n up to
    isomorphism, each with its automorphism group."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    perms = list(itertools.permutations(range(1, n + 1)))
    seen: set[frozenset] = set()
    classes = []
    for bits in range(1 << len(pairs)):
        edges = frozenset(p for i, p in enumerate(pairs) if bits >> i & 1)
        if edges in seen:
            continue
        orbit = set()
        for p in perms:
            mapped = frozenset(
                (min(p[u - 1], p[v - 1]), max(p[u - 1], p[v - 1])) for u, v in edges
            )
            orbit.add(mapped)
        seen.update(orbit)
        auts = [
            p
            for p in perms
            if frozenset(
                (min(p[u - 1], p[v - 1]), max(p[u - 1], p[v - 1])) for u, v in edges
            )
            == edges
        ]
        classes.append((edges, tuple(auts)))
    return tuple(classes)


@lru_cache(maxsize=None)
def digraph_classes(n: int) -> tuple[Digraph, ...]:
    """One representative per isomorphism class of loop-free digraphs on n
    vertices (double edges allowed).

    Orientation vectors over each undirected class are deduplicated by
    orbit-marking under the class's automorphism group.
    """
    out = []
    for edges, auts in _undirected_classes(n):
        edge_list = sorted(edges)
        m = len(edge_list)
        if m == 0:
            out.append(Digraph(n))
            continue
        index = {e: i for i, e in enumerate(edge_list)}
        tables = []
        for p in auts:
            tab = []
            for u, v in edge_list:
                a, b = p[u - 1], p[v - 1]
                if a < b:
                    tab.append((index[(a, b)], False))
                else:
                    tab.append((index[(b, a)], True))
            tables.append(tab)
        seen: set[tuple] = set()
        # edge codes: 0 forward (u->v with u<v), 1 backward, 2 double
        for vec in itertools.product((0, 1, 2), repeat=m):
            if vec in seen:
                continue
            orbit = set()
            for tab in tables:
                new = [0] * m
                for i, code in enumerate(vec):
                    j, flip = tab[i]
                    new[j] = code if (code == 2 or not flip) else 1 - code
                orbit.add(tuple(new))
            seen.update(orbit)
            d_edges = []
            for (u, v), code in zip(edge_list, vec):
                if code in (0, 2):
                    d_edges.append((u, v))
                if code in (1, 2):
                    d_edges.append((v, u))
            out.append(Digraph(n, d_edges))
    return tuple(out)


def random_digraph(rng: random.Random, n: int) -> Digraph:
    """Uniform state per unordered pair: absent, forward, backward, double."""
    edges = []
    for u, v in itertools.combinations(range(1, n + 1), 2):
        s = rng.randrange(4)
        if s in (1, 3):
            edges.append((u, v))
        if s in (2, 3):
            edges.append((v, u))
    return Digraph(n, edges)


def claw_orientations() -> list[Digraph]:
    """All 27 digraphs whose underlying graph is the star with three leaves."""
    out = []
    for codes in itertools.product((0, 1, 2), repeat=3):
        edges = []
        for leaf, code in zip((2, 3, 4), codes):
            if code in (0, 2):
                edges.append((1, leaf))
            if code in (1, 2):
                edges.append((leaf, 1))
        out.append(Digraph(4, edges))
    return out


def random_interval_digraph(rng: random.Random, n: int) -> Digraph:
    """Digraph of a random circular interval set on 1..n."""
    k = rng.randint(1, n)
    intervals = []
    for _ in range(k):
        a = rng.randint(1, n)
        length = rng.randint(0, n - 1)
        intervals.append((a, (a - 1 + length) % n + 1))
    return from_circular_intervals(CircularIntervalSet(n, intervals))


# ---------------------------------------------------------------------------
# golden data: the three labeled P3 orientations and their statistics chart
# ---------------------------------------------------------------------------

P3_DIGRAPH = Digraph(3, [(1, 2), (2, 3)])
K12_DIGRAPH = Digraph(3, [(2, 1), (2, 3)])
K21_DIGRAPH = Digraph(3, [(1, 2), (3, 2)])

# per permutation of 1..3: descent set, inversions in P3, K12, K21
GOLDEN_CHART = {
    (1, 2, 3): ((), 0, 1, 1),
    (1, 3, 2): ((), 1, 2, 0),
    (2, 1, 3): ((), 1, 0, 2),
    (2, 3, 1): ((2,), 1, 0, 2),
    (3, 1, 2): ((1,), 1, 2, 0),
    (3, 2, 1): ((), 2, 1, 1),
}

GOLDEN_OMEGA_X = {
    "P3": QSymElement(
        3, "F", {(): TPoly([1, 2, 1]), (1,): TPoly([0, 1]), (2,): TPoly([0, 1])}
    ),
    "K12": QSymElement(
        3, "F", {(): TPoly([1, 2, 1]), (2,): TPoly([1]), (1,): TPoly([0, 0, 1])}
    ),
    "K21": QSymElement(
        3, "F", {(): TPoly([1, 2, 1]), (1,): TPoly([1]), (2,): TPoly([0, 0, 1])}
    ),
}


# ---------------------------------------------------------------------------
# item plumbing
# ---------------------------------------------------------------------------

Item = tuple[str, Callable[[], tuple[bool, int, dict | None]]]


def _scan(pairs) -> tuple[bool, int, dict | None]:
    """Run (description, ok) pairs; stop at the first failure."""
    checked = 0
    for detail, ok in pairs:
        if not ok:
            return False, checked, detail
        checked += 1
    return True, checked, None


def _family_pool(max_n: int) -> list[Digraph]:
    pool = []
    for n in range(1, max_n + 1):
        pool.append(directed_path(n))
        if n >= 2:
            pool.append(directed_cycle(n))
        for r in range(1, n + 1):
            pool.append(g_c(n, r))
    return pool


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _items_f_theorem(b: dict) -> list[Item]:
    max_n = b.get("max_n", 4)
    random_count = b.get("random_count", 500)
    seed = b.get("seed", 2024)
    exhaustive_on = b.get("exhaustive", True)

    def golden():
        def rows():
            for sigma, (des, ip, i12, i21) in GOLDEN_CHART.items():
                st = perm_stats(P3_DIGRAPH, sigma)
                payload = {"sigma": list(sigma)}
                yield payload, st.gdes == frozenset(des)
                yield payload, st.ginv == ip
                yield payload, perm_stats(K12_DIGRAPH, sigma).ginv == i12
                yield payload, perm_stats(K21_DIGRAPH, sigma).ginv == i21
            for name, d in (("P3", P3_DIGRAPH), ("K12", K12_DIGRAPH), ("K21", K21_DIGRAPH)):
                yield {"expansion": name}, omega_x_via_f_theorem(d) == GOLDEN_OMEGA_X[name]

        return _scan(rows())

    def exhaustive():
        def rows():
            for n in range(1, max_n + 1):
                for d in all_digraphs(n):
                    yield d.to_json(), f_to_m(x_via_f_theorem(d)) == brute_force_x(d)

        return _scan(rows())

    def randomized():
        rng = random.Random(seed)

        def rows():
            for i in range(random_count):
                d = random_digraph(rng, 5 + i % 2)
                yield d.to_json(), f_to_m(x_via_f_theorem(d)) == brute_force_x(d)

        return _scan(rows())

    def relabeling():
        rng = random.Random(seed + 1)

        def rows():
            for _ in range(20):
                n = rng.randint(2, 5)
                d = random_digraph(rng, n)
                perm = list(range(1, n + 1))
                rng.shuffle(perm)
                yield {"graph": d.to_json(), "perm": perm}, relabel_invariance_check(d, perm)

        return _scan(rows())

    items: list[Item] = [("golden-statistics-chart", golden)]
    if exhaustive_on:
        items.append((f"oracle-exhaustive-n<={max_n}", exhaustive))
    items.append((f"oracle-random-{random_count}x(5,6)", randomized))
    items.append(("relabel-invariance", relabeling))
    return items


def _p_check(d: Digraph, x=None) -> bool:
    """omega(p-expansion) in the m basis equals brute force, and every
    z-scaled coefficient polynomial is nonnegative."""
    if x is None:
        x = brute_force_x(d)
    p = p_expansion_theorem(d, assume_symmetric=True)
    if convert(omega_sym(p), "m") != to_monomial_symmetric(x):
        return False
    return all(c >= 0 for poly in p.terms.values() for c in poly.coeffs)


def _items_p_theorem(b: dict) -> list[Item]:
    max_n = min(b.get("max_n", 5), 5)  # class enumeration feasible up to 5
    family_n = b.get("family_n", 7)

    def exhaustive_classes():
        def rows():
            for n in range(1, max_n + 1):
                for d in digraph_classes(n):
                    x = brute_force_x(d)
                    if is_symmetric(x):
                        yield d.to_json(), _p_check(d, x)

        return _scan(rows())

    def families():
        def rows():
            for n in range(1, family_n + 1):
                pool = [directed_path(n)]
                if n >= 2:
                    pool.append(directed_cycle(n))
                pool.extend(g_c(n, r) for r in range(1, n + 1))
                for d in pool:
                    yield d.to_json(), _p_check(d)

        return _scan(rows())

    def cycle_factorization():
        def rows():
            for n in range(2, family_n + 1):
                p = p_expansion_theorem(directed_cycle(n), assume_symmetric=True)
                for lam in partitions_of(n):
                    expected = cycle_p_coefficient(n, lam)
                    got = p.coeff(lam) * z_lambda(lam)
                    yield {"n": n, "lambda": list(lam)}, expected == got

        return _scan(rows())

    return [
        (f"symmetric-classes-n<={max_n}", exhaustive_classes),
        (f"families-n<={family_n}", families),
        (f"cycle-p-factorization-n<={family_n}", cycle_factorization),
    ]


def _items_cycle_e(b: dict) -> list[Item]:
    max_n = b.get("max_n", 8)

    def closed_form():
        def rows():
            for n in range(2, max_n + 1):
                lhs = convert(cycle_e_expansion(n), "m")
                rhs = to_monomial_symmetric(brute_force_x(directed_cycle(n)))
                yield {"n": n}, lhs == rhs

        return _scan(rows())

    def battery():
        def rows():
            for n in range(2, max_n + 1):
                e = cycle_e_expansion(n)
                yield {"n": n, "check": "e-positive"}, is_b_positive(e, "e")
                yield {"n": n, "check": "e-unimodal"}, is_e_unimodal(e, n)
                yield {"n": n, "check": "palindromic"}, is_palindromic_sym(e, Fraction(n, 2))

        return _scan(rows())

    return [
        (f"closed-form-vs-brute-n<={max_n}", closed_form),
        (f"positivity-battery-n<={max_n}", battery),
    ]


def _items_path_e(b: dict) -> list[Item]:
    max_n = b.get("max_n", 8)

    def closed_form():
        def rows():
            for n in range(1, max_n + 1):
                lhs = convert(path_e_expansion(n), "m")
                rhs = to_monomial_symmetric(brute_force_x(directed_path(n)))
                yield {"n": n}, lhs == rhs

        return _scan(rows())

    def battery():
        def rows():
            for n in range(1, max_n + 1):
                e = path_e_expansion(n)
                yield {"n": n, "check": "e-positive"}, is_b_positive(e, "e")
                yield {"n": n, "check": "e-unimodal"}, is_e_unimodal(e, n - 1)
                yield {"n": n, "check": "palindromic"}, is_palindromic_sym(
                    e, Fraction(n - 1, 2)
                )

        return _scan(rows())

    return [
        (f"closed-form-vs-brute-n<={max_n}", closed_form),
        (f"positivity-battery-n<={max_n}", battery),
    ]


def _e_layer_sums(d: Digraph) -> dict[int, TPoly]:
    e = convert(to_monomial_symmetric(brute_force_x(d)), "e")
    out: dict[int, TPoly] = {}
    for lam, poly in e.terms.items():
        k = len(lam)
        out[k] = out.get(k, TPoly.zero()) + poly
    return {k: p for k, p in out.items() if p}


def _items_sink_sum(b: dict) -> list[Item]:
    max_n = b.get("max_n", 7)

    def agreement():
        def rows():
            for n in range(1, max_n + 1):
                pool = [directed_path(n)]
                if n >= 2:
                    pool.append(directed_cycle(n))
                pool.extend(g_c(n, r) for r in range(2, n + 1))
                for d in pool:
                    got = ao_sink_sum(d, check_symmetric=False)
                    want = _e_layer_sums(d)
                    got = {k: p for k, p in got.items() if p}
                    yield d.to_json(), got == want

        return _scan(rows())

    return [(f"sink-sum-vs-e-layers-n<={max_n}", agreement)]


def _items_refinements(b: dict) -> list[Item]:
    max_n = b.get("max_n", 7)

    def cycles():
        def rows():
            for n in range(2, max_n + 1):
                ref = cycle_ao_refinement(n)
                e = cycle_e_expansion(n)
                for lam in partitions_of(n):
                    yield {"n": n, "lambda": list(lam)}, ref.get(
                        lam, TPoly.zero()
                    ) == e.coeff(lam)

        return _scan(rows())

    def paths():
        def rows():
            for n in range(1, max_n + 1):
                ref = path_ao_refinement(n)
                e = path_e_expansion(n)
                for lam in partitions_of(n):
                    yield {"n": n, "lambda": list(lam)}, ref.get(
                        lam, TPoly.zero()
                    ) == e.coeff(lam)

        return _scan(rows())

    return [
        (f"cycle-refinement-n<={max_n}", cycles),
        (f"path-refinement-n<={max_n}", paths),
    ]


def _items_symmetry(b: dict) -> list[Item]:
    max_n = b.get("max_n", 5)
    # exhaustive isomorphism-class enumeration is only feasible up to 5
    classes_n = min(max_n, 5)
    random_count = b.get("random_count", 200)
    seed = b.get("seed", 2024)
    family = b.get("family")

    def claw():
        def rows():
            for d in claw_orientations():
                yield d.to_json(), contains_forbidden(d)

        return _scan(rows())

    def forbidden_free_classes():
        def rows():
            for n in range(1, classes_n + 1):
                for d in digraph_classes(n):
                    if not contains_forbidden(d):
                        yield d.to_json(), is_symmetric(brute_force_x(d))

        return _scan(rows())

    def random_5_6():
        rng = random.Random(seed)

        def rows():
            for i in range(random_count):
                d = random_digraph(rng, 5 + i % 2)
                if not contains_forbidden(d):
                    yield d.to_json(), is_symmetric(brute_force_x(d))

        return _scan(rows())

    def interval_digraphs():
        rng = random.Random(seed + 7)

        def rows():
            for _ in range(60):
                d = random_interval_digraph(rng, rng.randint(1, 7))
                yield d.to_json(), not contains_forbidden(d)
                if d.n <= 6:
                    yield d.to_json(), is_symmetric(brute_force_x(d))

        return _scan(rows())

    items: list[Item] = [
        ("claw-orientations-forbidden", claw),
        (f"forbidden-free-classes-symmetric-n<={classes_n}", forbidden_free_classes),
        (f"forbidden-free-random-{random_count}x(5,6)", random_5_6),
        ("interval-digraphs-forbidden-free", interval_digraphs),
    ]
    if family is not None:
        builders = {
            "gc": lambda n: [g_c(n, r) for r in range(1, n + 1)],
            "cycle": lambda n: [directed_cycle(n)] if n >= 2 else [],
            "path": lambda n: [directed_path(n)],
        }
        if family not in builders:
            raise KeyError(f"unknown family {family!r}; choose from {sorted(builders)}")

        def family_symmetric():
            def rows():
                for n in range(1, min(max_n, 7) + 1):
                    for d in builders[family](n):
                        yield d.to_json(), not contains_forbidden(d)
                        yield d.to_json(), is_symmetric(brute_force_x(d))

            return _scan(rows())

        items.append((f"family-{family}-symmetric-n<={min(max_n, 7)}", family_symmetric))
    return items


def _items_palindromic(b: dict) -> list[Item]:
    max_n = min(b.get("max_n", 5), 5)  # class enumeration feasible up to 5

    def rho_descent_oracle():
        def rows():
            for n in range(1, max_n + 1):
                for d in digraph_classes(n):
                    x = brute_force_x(d)
                    # rho(X) is the descent generating function, i.e. X of
                    # the edge-reversed digraph
                    yield d.to_json(), rho(x) == brute_force_x(d.reverse())

        return _scan(rows())

    def palindromic_symmetric():
        def rows():
            for n in range(1, max_n + 1):
                for d in digraph_classes(n):
                    x = brute_force_x(d)
                    if not is_symmetric(x):
                        continue
                    s = to_monomial_symmetric(x)
                    center = Fraction(d.edge_count, 2)
                    yield d.to_json(), is_palindromic_sym(s, center)
                    yield d.to_json(), rho(x) == x

        return _scan(rows())

    return [
        (f"rho-descent-oracle-n<={max_n}", rho_descent_oracle),
        (f"palindromic-symmetric-n<={max_n}", palindromic_symmetric),
    ]


def _items_chung_graham(b: dict) -> list[Item]:
    max_n = min(b.get("max_n", 4), 5)  # class enumeration feasible up to 5
    family_n = b.get("family_n", 5)
    random_count = b.get("random_count", 10)
    seed = b.get("seed", 2024)

    def pool() -> list[Digraph]:
        out = []
        for n in range(1, max_n + 1):
            out.extend(digraph_classes(n))
        out.extend(_family_pool(family_n))
        rng = random.Random(seed + 3)
        out.extend(random_digraph(rng, 5) for _ in range(random_count))
        return out

    def agreement():
        def rows():
            for d in pool():
                x = brute_force_x(d)
                for m in range(d.n + 3):
                    direct = t_chromatic(d, m)
                    via_delta = t_chromatic_via_delta(d, m)
                    special = specialize_ones(x, m)
                    yield {"graph": d.to_json(), "m": m}, direct == via_delta == special

        return _scan(rows())

    def palindromic_layers():
        def rows():
            for d in pool():
                layers: dict[int, dict[int, int]] = {}
                for (k, inv), cnt in delta_table(d).items():
                    layers.setdefault(k, {})[inv] = cnt
                center = Fraction(d.edge_count, 2)
                for k, row in layers.items():
                    poly = TPoly([row.get(j, 0) for j in range(max(row) + 1)])
                    yield {"graph": d.to_json(), "k": k}, is_palindromic(poly, center)

        return _scan(rows())

    return [
        ("chi-three-routes-agree", agreement),
        ("delta-layers-palindromic", palindromic_layers),
    ]


def _items_eulerian(b: dict) -> list[Item]:
    max_k = b.get("max_k", 7)
    recurrence_n = b.get("recurrence_n", 9)

    def lemma():
        def rows():
            for k in range(2, max_k + 1):
                fwd = [0] * k
                bwd = [0] * k
                for sigma in itertools.permutations(range(1, k + 1)):
                    seen = [False] * (k + 1)
                    cycles = 0
                    for s in range(1, k + 1):
                        if not seen[s]:
                            cycles += 1
                            x = s
                            while not seen[x]:
                                seen[x] = True
                                x = sigma[x - 1]
                    if cycles != 1:
                        continue
                    fwd[sum(1 for i in range(1, k + 1) if sigma[i - 1] > i)] += 1
                    inverse = [0] * k
                    for i in range(1, k + 1):
                        inverse[sigma[i - 1] - 1] = i
                    bwd[sum(1 for i in range(1, k + 1) if inverse[i - 1] > i)] += 1
                expected = eulerian_poly(k - 1).shifted(1)
                yield {"k": k, "statistic": "exc"}, TPoly(fwd) == expected
                yield {"k": k, "statistic": "exc-of-inverse"}, TPoly(bwd) == expected

        return _scan(rows())

    def recurrence_vs_enumeration():
        def rows():
            for n in range(recurrence_n + 1):
                yield {"n": n}, eulerian_poly(n) == eulerian_poly_by_enumeration(n)

        return _scan(rows())

    return [
        (f"k-cycle-excedance-lemma-k<={max_k}", lemma),
        (f"recurrence-vs-enumeration-n<={recurrence_n}", recurrence_vs_enumeration),
    ]


def _items_phi(b: dict) -> list[Item]:
    samples = b.get("samples", 10000)
    seed = b.get("seed", 2024)

    def sampled():
        rng = random.Random(seed)
        pool = []
        while len(pool) < 25:
            d = random_interval_digraph(rng, rng.randint(2, 8))
            if not contains_forbidden(d):
                pool.append(d)

        def rows():
            produced = 0
            while produced < samples:
                d = pool[rng.randrange(len(pool))]
                max_color = d.n + 1
                colors = None
                for _ in range(200):
                    cand = tuple(rng.randint(1, max_color) for _ in range(d.n))
                    if is_proper(d, cand):
                        colors = cand
                        break
                if colors is None:
                    continue
                a = rng.randint(1, max_color)
                payload = {"graph": d.to_json(), "colors": list(colors), "a": a}
                image = phi_a(d, colors, a, check_forbidden=False)
                yield payload, phi_a(d, image, a, check_forbidden=False) == colors
                yield payload, ascent_count(d, image) == ascent_count(d, colors)
                before, after = Counter(colors), Counter(image)
                yield payload, before[a] == after[a + 1] and before[a + 1] == after[a]
                others_ok = all(
                    before[c] == after[c]
                    for c in set(before) | set(after)
                    if c not in (a, a + 1)
                )
                yield payload, others_ok
                produced += 1

        return _scan(rows())

    return [(f"involution-ascents-counts-{samples}-samples", sampled)]


def _items_closed_forms(b: dict) -> list[Item]:
    max_n = b.get("max_n", 6)
    positivity_n = b.get("positivity_n", 7)

    def dense_families():
        def rows():
            for n in range(1, max_n + 1):
                for r in (n - 1, n):
                    if r < 1:
                        continue
                    lhs = convert(gc_closed_form(n, r), "m")
                    rhs = to_monomial_symmetric(brute_force_x(g_c(n, r)))
                    yield {"n": n, "r": r}, lhs == rhs

        return _scan(rows())

    def sparse_families():
        def rows():
            for n in range(1, max_n + 1):
                for r in (1, 2):
                    if r > n:
                        continue
                    lhs = convert(gc_closed_form(n, r), "m")
                    rhs = to_monomial_symmetric(brute_force_x(g_c(n, r)))
                    yield {"n": n, "r": r}, lhs == rhs

        return _scan(rows())

    def gc_positivity():
        def rows():
            for n in range(1, positivity_n + 1):
                for r in range(1, n + 1):
                    d = g_c(n, r)
                    e = convert(to_monomial_symmetric(brute_force_x(d)), "e")
                    yield {"n": n, "r": r, "check": "e-positive"}, is_b_positive(e, "e")
                    yield {"n": n, "r": r, "check": "e-unimodal"}, is_e_unimodal(
                        e, d.edge_count
                    )

        return _scan(rows())

    return [
        (f"complete-and-near-complete-n<={max_n}", dense_families),
        (f"edgeless-and-cycle-n<={max_n}", sparse_families),
        (f"gc-positivity-n<={positivity_n}", gc_positivity),
    ]


def _items_intervals(b: dict) -> list[Item]:
    seed = b.get("seed", 2024)
    trials = b.get("trials", 40)

    def arc_round_trip():
        rng = random.Random(seed + 11)

        def rows():
            for _ in range(trials):
                n = rng.randint(1, 9)
                k = rng.randint(0, n)
                ivs = CircularIntervalSet(
                    n,
                    [
                        (a, (a - 1 + rng.randint(0, n - 1)) % n + 1)
                        for a in rng.sample(range(1, n + 1), k)
                    ],
                )
                d = from_circular_intervals(ivs)
                payload = {"intervals": ivs.to_json()}
                yield payload, from_circular_intervals(normalize_intervals(ivs)) == d
                yield payload, from_arcs(arcs_from_intervals(ivs)) == d
                yield payload, not contains_forbidden(d)

        return _scan(rows())

    def ao_count_oracle():
        # number of acyclic orientations equals |chi(-1)| at t=1
        from .chromatic import delta_chi

        rng = random.Random(seed + 13)

        def rows():
            pool = [underlying(random_digraph(rng, rng.randint(2, 6))) for _ in range(15)]
            for g in pool:
                count = sum(1 for _ in acyclic_orientations(g))
                d = Digraph(g.n, g.edges)  # one orientation per edge suffices
                value = delta_chi(d, Fraction(-1))(1)
                yield {"n": g.n, "edges": sorted(g.edges)}, abs(value) == count

        return _scan(rows())

    return [
        (f"interval-arc-round-trips-{trials}", arc_round_trip),
        ("acyclic-orientation-count-vs-chi(-1)", ao_count_oracle),
    ]


SUITES: dict[str, Callable[[dict], list[Item]]] = {
    "f-theorem": _items_f_theorem,
    "p-theorem": _items_p_theorem,
    "cycle-e": _items_cycle_e,
    "path-e": _items_path_e,
    "sink-sum": _items_sink_sum,
    "refinements": _items_refinements,
    "symmetry": _items_symmetry,
    "palindromic": _items_palindromic,
    "chung-graham": _items_chung_graham,
    "eulerian": _items_eulerian,
    "phi": _items_phi,
    "closed-forms": _items_closed_forms,
    "intervals": _items_intervals,
}


def _run_indexed_item(suite: str, bounds: dict, index: int) -> CheckResult:
    name, thunk = SUITES[suite](bounds)[index]
    passed, checked, detail = thunk()
    return CheckResult(suite, name, passed, checked, detail)


def run_suite(suite: str, bounds: dict | None = None, jobs: int = 1) -> list[CheckResult]:
    """Run one suite; items may fan out over `jobs` worker processes."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    bounds = bounds or {}
    items = SUITES[suite](bounds)
    if jobs <= 1 or len(items) <= 1:
        return [_run_indexed_item(suite, bounds, i) for i in range(len(items))]
    import concurrent.futures

    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_run_indexed_item, suite, bounds, i) for i in range(len(items))
        ]
        return [f.result() for f in futures]


def run_all(bounds_by_suite: dict | None = None, jobs: int = 1) -> list[CheckResult]:
    """Run every suite (the full battery)."""
    bounds_by_suite = bounds_by_suite or {}
    results = []
    for suite in SUITES:
        results.extend(run_suite(suite, bounds_by_suite.get(suite), jobs=jobs))
    return results
