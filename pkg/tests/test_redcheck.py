import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import DEG17, HUCKABA, exhaustive
from rrreg.equigen import GeneratorSet, reduction_number
from rrreg.errors import DegenerateReductionError, FormsNotInIdealError, InputError
from rrreg.redcheck import (
    GradedSubspace,
    HomogeneousForm2,
    bareiss_rank,
    is_reduction_at,
    matrix_rank,
    random_form,
    reduction_number_of,
    sample_reductions,
)
from rrreg.regularity import reg_rees
from rrreg.ratliff_rush import rr_indices

X7 = HomogeneousForm2(7, {0: 1})
Y7 = HomogeneousForm2(7, {7: 1})
G = HomogeneousForm2(7, {1: 1, 7: 1})


def mono_pair(d):
    return HomogeneousForm2.monomial(d, 0), HomogeneousForm2.monomial(d, d)


class TestForms:
    def test_zero_form(self):
        with pytest.raises(DegenerateReductionError):
            HomogeneousForm2(3, {1: 0})

    def test_support_range(self):
        with pytest.raises(InputError):
            HomogeneousForm2(3, {4: 1})

    def test_integer_scaling(self):
        f = HomogeneousForm2(2, {0: Fraction(1, 2), 2: Fraction(2, 3)})
        assert f.integer_coeffs() == {0: 3, 2: 4}

    def test_str(self):
        assert str(G) == "x^6*y + y^7"
        assert str(HomogeneousForm2(2, {0: Fraction(3, 2), 1: -1})) == "3/2*x^2 - x*y"


class TestGradedSubspace:
    def test_rref(self):
        S = GradedSubspace.span(2, [[2, 4, 0], [1, 2, 1], [3, 6, 1]])
        assert S.rank == 2 and S.basis_dim == 3
        assert S.rows == ((1, 2, 0), (0, 0, 1))
        assert S.contains([5, 10, -3]) and not S.contains([0, 1, 0])

    @given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
    def test_invariants(self, vecs):
        S = GradedSubspace.span(3, vecs)
        pivots = [next(k for k, x in enumerate(r) if x) for r in S.rows]
        assert pivots == sorted(set(pivots))
        for r, p in zip(S.rows, pivots):
            assert r[p] == 1
            assert all(other[p] == 0 for other in S.rows if other is not r)
        assert S.rank == oracles.rank(vecs, 4) <= 4
        assert all(S.contains(v) for v in vecs)


class TestRank:
    @given(st.lists(st.lists(st.integers(-50, 50), min_size=5, max_size=5), min_size=1, max_size=7))
    def test_exact_rank(self, rows):
        want = oracles.rank(rows, 5)
        assert bareiss_rank(rows) == want
        assert matrix_rank(rows) == want
        # a different pivot order gives the same rank
        assert bareiss_rank(rows[::-1]) == want
        assert bareiss_rank([r[::-1] for r in rows]) == want

    def test_rank_deficient_mod_p_filter(self):
        # full rank over Q but singular modulo the filter prime
        p = 2147483647
        rows = [[p, 0], [0, 1]]
        assert matrix_rank(rows) == 2
        assert matrix_rank(rows, field=p) == 1


class TestIsReduction:
    def test_huckaba_examples(self):
        assert is_reduction_at(HUCKABA, X7, G, 3)
        assert not is_reduction_at(HUCKABA, X7, G, 2)
        assert not is_reduction_at(HUCKABA, X7, Y7, 3)
        assert oracles.reduction_rank_ok(HUCKABA.A, 7, {0: 1}, {1: 1, 7: 1}, 3)
        assert not oracles.reduction_rank_ok(HUCKABA.A, 7, {0: 1}, {1: 1, 7: 1}, 2)

    def test_degenerate(self):
        with pytest.raises(DegenerateReductionError):
            is_reduction_at(HUCKABA, X7, X7, 1)
        with pytest.raises(DegenerateReductionError):
            # common factor x
            is_reduction_at(HUCKABA, X7, HomogeneousForm2(7, {0: 1, 1: 2}), 1)

    def test_not_in_ideal(self):
        with pytest.raises(FormsNotInIdealError):
            is_reduction_at(HUCKABA, X7, HomogeneousForm2(7, {3: 1, 7: 1}), 1)

    def test_wrong_degree(self):
        with pytest.raises(InputError):
            is_reduction_at(HUCKABA, X7, HomogeneousForm2(6, {6: 1}), 1)

    def test_prime_field(self):
        assert reduction_number_of(HUCKABA, X7, G, 6, field=1000003) == 3
        with pytest.raises(ValueError):
            reduction_number_of(HUCKABA, X7, G, 6, field=2**31 + 11)


class TestReductionNumberOf:
    def test_examples(self):
        assert reduction_number_of(HUCKABA, X7, G, 10) == 3
        assert reduction_number_of(HUCKABA, X7, Y7, 10) == 4 == reduction_number(HUCKABA)
        assert reduction_number_of(GeneratorSet(5, [0, 5]), *mono_pair(5), 3) == 0

    def test_sentinel(self):
        assert reduction_number_of(HUCKABA, X7, Y7, 3) is None

    def test_rational_coefficients(self):
        g = HomogeneousForm2(7, {1: Fraction(1, 3), 7: Fraction(5, 2)})
        assert reduction_number_of(HUCKABA, X7, g, 10) == 3

    @pytest.mark.parametrize("E", exhaustive(6), ids=str)
    def test_monomial_pair_oracle(self, E):
        assert reduction_number_of(E, *mono_pair(E.d), reg_rees(E) + 1) == reduction_number(E)

    @pytest.mark.parametrize("E", exhaustive(6)[::3] + [HUCKABA], ids=str)
    def test_monotone_and_oracle_for_random_pairs(self, E):
        rng = random.Random(str(E))
        cap = reg_rees(E) + 1
        for _ in range(3):
            f, g = random_form(E, rng), random_form(E, rng)
            if f is None or g is None:
                continue
            try:
                seq = [is_reduction_at(E, f, g, n) for n in range(cap + 1)]
            except DegenerateReductionError:
                continue
            assert seq == sorted(seq)
            for n, v in enumerate(seq):
                assert v == oracles.reduction_rank_ok(E.A, E.d, f.integer_coeffs(), g.integer_coeffs(), n)


class TestSampling:
    def test_huckaba_realizes_both(self):
        s = sample_reductions(HUCKABA, 25, seed=7)
        assert 3 in s.histogram and 4 in s.histogram
        assert s.lower_bound_br == 4 and not s.watch

    def test_parameter(self):
        s = sample_reductions(GeneratorSet(4, [0, 4]), 10, seed=1)
        assert set(s.histogram) == {0} and not s.watch

    def test_middle_no_flag(self):
        s = sample_reductions(GeneratorSet(6, [0, 2, 3, 4, 6]), 10, seed=1)
        assert s.max_r >= s.s_star == 1 and not s.watch

    def test_deterministic(self):
        a = sample_reductions(HUCKABA, 15, seed=11)
        b = sample_reductions(HUCKABA, 15, seed=11)
        assert a == b and a.seeds == b.seeds

    def test_degree17_generic_value(self):
        # a generic reduction has reduction number 3, the monomial one 4
        s = sample_reductions(DEG17, 10, seed=0)
        assert s.anchor_r == 4 and s.min_r == 3

    @pytest.mark.parametrize("E", exhaustive(6)[1::4] + [HUCKABA], ids=str)
    def test_values_above_s_star_equal_reg(self, E):
        R = reg_rees(E)
        s = sample_reductions(E, 8, seed=3, regR=R)
        for r in s.histogram:
            assert r <= R
            if r > s.s_star:
                assert r == R

    @settings(max_examples=10, deadline=None)
    @given(st.integers(0, 10**6))
    def test_never_exceeds_reg(self, seed):
        s = sample_reductions(HUCKABA, 3, seed)
        assert max(s.histogram) <= 4
