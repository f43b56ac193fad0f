import itertools
import random
from fractions import Fraction

import pytest

from cqsym.algebra import TPoly, eulerian_poly, partitions_of, t_bracket, z_lambda
from cqsym.chromatic import brute_force_x, p_expansion_theorem
from cqsym.digraph import Digraph, contains_forbidden
from cqsym.errors import NotSymmetricError
from cqsym.families import (
    ArcFamily,
    CircularIntervalSet,
    ao_sink_sum,
    arcs_from_intervals,
    circular_interval,
    complete_acyclic,
    complete_double,
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
from cqsym.qsym import is_symmetric, to_monomial_symmetric
from cqsym.sym import convert


def random_interval_set(rng, n):
    k = rng.randint(0, n)
    return CircularIntervalSet(
        n,
        [
            (a, (a - 1 + rng.randint(0, n - 1)) % n + 1)
            for a in rng.sample(range(1, n + 1), k)
        ],
    )


class TestConstructors:
    def test_gc_two_is_cycle(self):
        assert g_c(4, 2) == Digraph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
        for n in range(2, 7):
            assert g_c(n, 2) == directed_cycle(n)

    def test_cycle_two_is_double_edge(self):
        assert directed_cycle(2) == Digraph(2, [(1, 2), (2, 1)])

    def test_gc_extremes(self):
        assert g_c(3, 3) == complete_double(3)
        assert g_c(5, 1) == Digraph(5)
        assert g_c(4, 4).edge_count == 12

    def test_complete_acyclic(self):
        assert complete_acyclic(3) == Digraph(3, [(1, 2), (1, 3), (2, 3)])

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            directed_cycle(1)
        with pytest.raises(ValueError):
            g_c(3, 4)
        with pytest.raises(ValueError):
            g_c(3, 0)


class TestCircularIntervals:
    def test_interval_members(self):
        assert circular_interval(2, 4, 5) == (2, 3, 4)
        assert circular_interval(4, 1, 5) == (4, 5, 1)
        assert circular_interval(3, 3, 5) == (3,)
        assert circular_interval(2, 1, 5) == (2, 3, 4, 5, 1)  # full wrap

    def test_worked_example(self):
        ivs = CircularIntervalSet(5, [(1, 3), (2, 4), (4, 5), (5, 1)])
        d = from_circular_intervals(ivs)
        assert d.edges == frozenset(
            {(1, 2), (2, 3), (1, 3), (3, 4), (2, 4), (4, 5), (5, 1)}
        )

    def test_empty(self):
        assert from_circular_intervals(CircularIntervalSet(4)) == Digraph(4)

    def test_normalize_worked_example(self):
        ivs = CircularIntervalSet(5, [(1, 3), (3, 4), (4, 5), (5, 1)])
        assert normalize_intervals(ivs).intervals == frozenset(
            {(1, 3), (2, 3), (3, 4), (4, 5), (5, 1)}
        )

    def test_normalize_preserves_digraph(self):
        rng = random.Random(101)
        for _ in range(30):
            ivs = random_interval_set(rng, rng.randint(1, 8))
            assert from_circular_intervals(normalize_intervals(ivs)) == from_circular_intervals(ivs)

    def test_outputs_forbidden_free_and_symmetric(self):
        rng = random.Random(103)
        for _ in range(20):
            d = from_circular_intervals(random_interval_set(rng, rng.randint(1, 7)))
            assert not contains_forbidden(d)
            if d.n <= 6:
                assert is_symmetric(brute_force_x(d))

    def test_acyclic_outputs(self):
        # interval sets with no wrap give acyclic digraphs, still clean
        rng = random.Random(107)
        for _ in range(20):
            n = rng.randint(2, 7)
            ivs = CircularIntervalSet(
                n, [(a, rng.randint(a, n)) for a in rng.sample(range(1, n + 1), rng.randint(0, n))]
            )
            d = from_circular_intervals(ivs)
            assert not contains_forbidden(d)
            if d.n <= 6:
                assert is_symmetric(brute_force_x(d))

    def test_json_round_trip(self):
        ivs = CircularIntervalSet(5, [(1, 3), (4, 2)])
        assert CircularIntervalSet.from_json(ivs.to_json()) == ivs


class TestArcs:
    def test_disjoint_arcs_edgeless(self):
        arcs = ArcFamily(
            [(Fraction(i, 6), Fraction(1, 20)) for i in range(6)]
        )
        assert from_arcs(arcs) == Digraph(6)

    def test_mutual_overlap_two_cycle(self):
        arcs = ArcFamily([(0, Fraction(3, 5)), (Fraction(1, 2), Fraction(3, 5))])
        assert from_arcs(arcs) == Digraph(2, [(1, 2), (2, 1)])

    def test_proper_containment_rejected(self):
        with pytest.raises(ValueError):
            ArcFamily([(0, Fraction(1, 2)), (Fraction(1, 10), Fraction(1, 10))])

    def test_round_trip_with_intervals(self):
        rng = random.Random(109)
        for _ in range(25):
            ivs = random_interval_set(rng, rng.randint(1, 8))
            assert from_arcs(arcs_from_intervals(ivs)) == from_circular_intervals(ivs)

    def test_json_round_trip(self):
        arcs = ArcFamily([(Fraction(1, 8), Fraction(1, 3))])
        assert ArcFamily.from_json(arcs.to_json()).arcs == arcs.arcs


class TestCycleEExpansion:
    def test_small_values(self):
        assert cycle_e_expansion(2).terms == {(2,): TPoly([0, 2])}
        assert cycle_e_expansion(3).terms == {(3,): TPoly([0, 3, 3])}
        assert cycle_e_expansion(4).terms == {
            (4,): TPoly([0, 4, 4, 4]),
            (2, 2): TPoly([0, 0, 2]),
        }

    def test_parts_of_size_one_vanish(self):
        for n in (3, 4, 5, 6):
            e = cycle_e_expansion(n)
            for lam in e.terms:
                assert 1 not in lam

    @pytest.mark.parametrize("n", range(2, 7))
    def test_matches_brute_force(self, n):
        lhs = convert(cycle_e_expansion(n), "m")
        assert lhs == to_monomial_symmetric(brute_force_x(directed_cycle(n)))

    def test_validation(self):
        with pytest.raises(ValueError):
            cycle_e_expansion(1)


class TestPathEExpansion:
    def test_small_values(self):
        assert path_e_expansion(1).terms == {(1,): TPoly.one()}
        assert path_e_expansion(2).terms == {(2,): TPoly([1, 1])}
        assert path_e_expansion(3).terms == {(3,): TPoly([1, 1, 1]), (2, 1): TPoly([0, 1])}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_brute_force(self, n):
        lhs = convert(path_e_expansion(n), "m")
        assert lhs == to_monomial_symmetric(brute_force_x(directed_path(n)))


class TestCyclePCoefficient:
    def test_examples(self):
        assert cycle_p_coefficient(3, (3,)) == TPoly([0, 3, 3])
        assert cycle_p_coefficient(3, (2, 1)) == TPoly([0, 3, 3])
        assert cycle_p_coefficient(3, (1, 1, 1)) == TPoly([0, 3, 3])

    def test_formula_shape(self):
        # lambda = (n): n t [n-1]_t; otherwise n t A_(k-1) prod [lambda_i]_t
        assert cycle_p_coefficient(5, (5,)) == t_bracket(4).shifted(1) * 5
        expected = eulerian_poly(1).shifted(1) * 4 * t_bracket(2) * t_bracket(2)
        assert cycle_p_coefficient(4, (2, 2)) == expected

    @pytest.mark.parametrize("n", range(2, 6))
    def test_matches_generic_expansion(self, n):
        p = p_expansion_theorem(directed_cycle(n))
        for lam in partitions_of(n):
            assert cycle_p_coefficient(n, lam) == p.coeff(lam) * z_lambda(lam)

    def test_validation(self):
        with pytest.raises(ValueError):
            cycle_p_coefficient(3, (1, 2))


class TestGcClosedForms:
    def test_complete_double(self):
        assert gc_closed_form(3, 3).terms == {(3,): TPoly.monomial(3, 6)}

    def test_near_complete(self):
        expected = eulerian_poly(3).shifted(3) * 4
        assert gc_closed_form(4, 3).terms == {(4,): expected}

    def test_edgeless(self):
        lhs = convert(gc_closed_form(3, 1), "m")
        assert lhs == to_monomial_symmetric(brute_force_x(Digraph(3)))

    @pytest.mark.parametrize("n,r", [(4, 4), (4, 3), (5, 5), (5, 4), (5, 2), (5, 1)])
    def test_matches_brute_force(self, n, r):
        lhs = convert(gc_closed_form(n, r), "m")
        assert lhs == to_monomial_symmetric(brute_force_x(g_c(n, r)))

    def test_unsupported_r(self):
        with pytest.raises(ValueError):
            gc_closed_form(6, 3)


class TestAoSinkSum:
    def test_cycle_three(self):
        assert ao_sink_sum(directed_cycle(3)) == {1: TPoly([0, 3, 3])}

    def test_single_edge(self):
        assert ao_sink_sum(Digraph(2, [(1, 2)])) == {1: TPoly([1, 1])}

    def test_edgeless_two(self):
        assert ao_sink_sum(Digraph(2)) == {2: TPoly.one()}

    def test_rejects_non_symmetric(self):
        with pytest.raises(NotSymmetricError):
            ao_sink_sum(Digraph(3, [(2, 1), (2, 3)]))

    @pytest.mark.parametrize("d", [directed_cycle(5), directed_path(5), g_c(5, 3)])
    def test_matches_e_layer_sums(self, d):
        e = convert(to_monomial_symmetric(brute_force_x(d)), "e")
        layers = {}
        for lam, poly in e.terms.items():
            layers[len(lam)] = layers.get(len(lam), TPoly.zero()) + poly
        layers = {k: p for k, p in layers.items() if p}
        assert ao_sink_sum(d, check_symmetric=False) == layers


class TestRefinements:
    def test_cycle_examples(self):
        assert cycle_ao_refinement(4)[(2, 2)] == TPoly([0, 0, 2])
        assert cycle_ao_refinement(3).get((2, 1), TPoly.zero()) == TPoly.zero()

    def test_path_examples(self):
        assert path_ao_refinement(2)[(2,)] == TPoly([1, 1])
        assert path_ao_refinement(1) == {(1,): TPoly.one()}

    @pytest.mark.parametrize("n", range(2, 7))
    def test_cycle_matches_expansion(self, n):
        ref = cycle_ao_refinement(n)
        e = cycle_e_expansion(n)
        for lam in partitions_of(n):
            assert ref.get(lam, TPoly.zero()) == e.coeff(lam)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_path_matches_expansion(self, n):
        ref = path_ao_refinement(n)
        e = path_e_expansion(n)
        for lam in partitions_of(n):
            assert ref.get(lam, TPoly.zero()) == e.coeff(lam)


class TestEulerianLemma:
    @pytest.mark.parametrize("k", range(2, 6))
    def test_k_cycle_excedances(self, k):
        counts = [0] * (k + 1)
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
            if cycles == 1:
                counts[sum(1 for i in range(1, k + 1) if sigma[i - 1] > i)] += 1
        assert TPoly(counts) == eulerian_poly(k - 1).shifted(1)
