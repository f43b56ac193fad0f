import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cqsym.algebra import (
    TPoly,
    as_partition,
    comp_descents,
    compositions_of,
    descent_comp,
    eulerian_poly,
    eulerian_poly_by_enumeration,
    is_palindromic,
    is_unimodal,
    num_rearrangements,
    partitions_of,
    rearrangements_of,
    t_bracket,
    t_factorial,
    z_lambda,
)

small_polys = st.lists(st.integers(-5, 5), max_size=6).map(TPoly)


class TestTPoly:
    def test_trailing_zeros_trimmed(self):
        assert TPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert TPoly([0, 0]).is_zero
        assert TPoly().degree() == -1

    def test_arithmetic_examples(self):
        p = TPoly([1, 1])
        assert p + p == TPoly([2, 2])
        assert p - p == TPoly()
        assert p * p == TPoly([1, 2, 1])
        assert p * 2 == TPoly([2, 2])
        assert 3 - p == TPoly([2, -1])
        assert p**3 == TPoly([1, 3, 3, 1])
        assert p.shifted(2) == TPoly([0, 0, 1, 1])

    def test_exact_rationals(self):
        p = TPoly([Fraction(1, 3)]) * 3
        assert p == TPoly.one()
        assert TPoly([1, 1])(Fraction(1, 2)) == Fraction(3, 2)

    @given(small_polys, small_polys, small_polys)
    @settings(deadline=None)
    def test_ring_laws(self, p, q, r):
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(small_polys, small_polys, st.integers(-3, 3))
    @settings(deadline=None)
    def test_evaluation_is_a_homomorphism(self, p, q, x):
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)

    def test_rendering(self):
        assert str(TPoly()) == "0"
        assert str(TPoly([1, 2, 1])) == "1 + 2*t + t^2"
        assert str(TPoly([0, -1])) == "-t"
        assert str(TPoly([1, 0, -2])) == "1 - 2*t^2"
        assert str(TPoly([Fraction(1, 2)])) == "1/2"
        assert TPoly([Fraction(1, 2), 0, 1]).latex() == r"\frac{1}{2} + t^{2}"

    @given(small_polys)
    @settings(deadline=None)
    def test_json_round_trip(self, p):
        assert TPoly.from_json(p.to_json()) == p


class TestTGadgets:
    def test_t_bracket(self):
        assert t_bracket(0) == TPoly()
        assert t_bracket(1) == TPoly.one()
        assert t_bracket(3) == TPoly([1, 1, 1])

    def test_t_factorial(self):
        assert t_factorial(0) == TPoly.one()
        assert t_factorial(2) == TPoly([1, 1])
        # oracle: multiply the brackets directly
        assert t_factorial(3) == t_bracket(3) * t_bracket(2) * t_bracket(1)
        assert t_factorial(3) == TPoly([1, 2, 2, 1])

    @pytest.mark.parametrize("n", range(9))
    def test_specialization_at_one(self, n):
        assert t_bracket(n)(1) == n
        assert t_factorial(n)(1) == math.factorial(n)

    def test_eulerian_examples(self):
        assert eulerian_poly(0) == TPoly.one()
        assert eulerian_poly(2) == TPoly([1, 1])
        assert eulerian_poly(3) == TPoly([1, 4, 1])

    @pytest.mark.parametrize("n", range(8))
    def test_eulerian_recurrence_matches_enumeration(self, n):
        assert eulerian_poly(n) == eulerian_poly_by_enumeration(n)


class TestPartitionsCompositions:
    def test_compositions_order(self):
        assert compositions_of(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_composition_count(self, n):
        assert len(compositions_of(n)) == 2 ** (n - 1)

    def test_partitions_order(self):
        assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_rearrangements(self):
        assert rearrangements_of((2, 2)) == [(2, 2)]
        assert rearrangements_of((2, 1)) == [(1, 2), (2, 1)]
        assert rearrangements_of((1, 1, 1, 1)) == [(1, 1, 1, 1)]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_rearrangement_count(self, n):
        for lam in partitions_of(n):
            assert len(rearrangements_of(lam)) == num_rearrangements(lam)

    def test_as_partition_validation(self):
        with pytest.raises(ValueError):
            as_partition((1, 2))
        with pytest.raises(ValueError):
            as_partition((2, 0))

    def test_z_lambda(self):
        assert z_lambda((1, 1, 1)) == 6
        assert z_lambda((2, 1)) == 2
        assert z_lambda((3,)) == 3

    @pytest.mark.parametrize("n", range(1, 9))
    def test_z_lambda_centralizer_identity(self, n):
        # summing class sizes n!/z_lambda recovers |S_n|
        total = sum(
            Fraction(math.factorial(n), z_lambda(lam)) for lam in partitions_of(n)
        )
        assert total == math.factorial(n)

    def test_z_lambda_counts_cycle_types(self):
        import itertools

        for n in range(1, 7):
            counts = {}
            for sigma in itertools.permutations(range(1, n + 1)):
                seen = [False] * (n + 1)
                lam = []
                for s in range(1, n + 1):
                    if seen[s]:
                        continue
                    length = 0
                    x = s
                    while not seen[x]:
                        seen[x] = True
                        x = sigma[x - 1]
                        length += 1
                    lam.append(length)
                key = tuple(sorted(lam, reverse=True))
                counts[key] = counts.get(key, 0) + 1
            for lam, cnt in counts.items():
                assert cnt == math.factorial(n) // z_lambda(lam)

    def test_descent_set_round_trip(self):
        assert comp_descents((2, 1, 3)) == (2, 3)
        assert descent_comp(6, (2, 3)) == (2, 1, 3)
        for n in range(1, 8):
            for comp in compositions_of(n):
                assert descent_comp(n, comp_descents(comp)) == comp


class TestShapePredicates:
    def test_palindromic_examples(self):
        assert is_palindromic(TPoly([1, 2, 1]), 1)
        assert is_palindromic(TPoly([1, 0, 1]), 1)
        assert not is_palindromic(TPoly([1, 2]), Fraction(1, 2))
        assert is_palindromic(TPoly(), 3)
        assert not is_palindromic(TPoly([1, 1, 1]), Fraction(1, 2))

    @given(
        st.lists(st.integers(0, 4), min_size=1, max_size=4),
        st.lists(st.integers(0, 4), min_size=1, max_size=4),
    )
    @settings(deadline=None)
    def test_palindromic_products(self, a, b):
        # mirror-extended coefficient lists are palindromic by construction
        p = TPoly(a + a[::-1])
        q = TPoly(b + b[::-1])
        if p.is_zero or q.is_zero:
            return
        cp = Fraction(2 * len(a) - 1, 2)
        cq = Fraction(2 * len(b) - 1, 2)
        assert is_palindromic(p, cp)
        assert is_palindromic(q, cq)
        assert is_palindromic(p * q, cp + cq)

    def test_unimodal(self):
        assert is_unimodal(TPoly([1, 3, 2]))
        assert is_unimodal(TPoly([0, 1, 1]))
        assert not is_unimodal(TPoly([1, 0, 1]))
        assert is_unimodal(TPoly())
