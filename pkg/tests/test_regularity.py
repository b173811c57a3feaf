from math import gcd

import pytest

import oracles
from conftest import DEG17, EXHAUSTIVE_7, HUCKABA, RANDOM_12, exhaustive
from rrreg.equigen import GeneratorSet, power_ideal, reduction_number
from rrreg.errors import InternalCheckError
from rrreg.ratliff_rush import rr_indices
from rrreg.regularity import (
    EUClass,
    RegularityResult,
    classes_of,
    eu_verdict,
    most_specific,
    reduction_identity_holds,
    reg_fiber,
    reg_rees,
    reg_rees_alternative,
    reg_rees_via_rr,
    safe_cap,
    superficial_colon_witness,
    three_generator_regularity,
)
from rrreg.staircase import Monomial2, colon_monomial


class TestSafeCap:
    @pytest.mark.parametrize("d, cap", [(2, 12), (7, 2352), (1, 1)])
    def test_values(self, d, cap):
        assert safe_cap(d) == cap

    def test_invalid(self):
        with pytest.raises(ValueError):
            safe_cap(0)


class TestRegRees:
    def test_huckaba(self):
        assert reg_rees(HUCKABA) == reg_rees_via_rr(HUCKABA) == reg_rees_alternative(HUCKABA) == 4

    def test_degree17(self):
        assert reg_rees(DEG17) == 4

    @pytest.mark.parametrize("d", [1, 4, 9])
    def test_parameter(self, d):
        E = GeneratorSet(d, [0, d])
        assert reg_rees(E) == reg_rees_via_rr(E) == reg_rees_alternative(E) == reg_fiber(E) == 0

    def test_middle_equals_r(self):
        E = GeneratorSet(6, [0, 2, 3, 4, 6])
        assert reg_rees_via_rr(E) == reduction_number(E)

    def test_three_generator_alternative(self):
        assert reg_rees_alternative(GeneratorSet(6, [0, 4, 6])) == 2

    @pytest.mark.parametrize("E", exhaustive(6) + [HUCKABA], ids=str)
    def test_binomial_colon_oracle(self, E):
        assert reg_rees(E) == oracles.reg_rees(E.A, E.d)

    @pytest.mark.parametrize("E", exhaustive(5), ids=str)
    def test_witness_matches_linear_algebra(self, E):
        r = reduction_number(E)
        for n in range(max(r, 1), r + 4):
            got = superficial_colon_witness(E, n) is None
            assert got == oracles.binomial_colon_is_trivial(E.A, E.d, n)

    def test_x_power_is_not_superficial(self):
        # x y^(7n-1) is in I^(n+1) : x^7 but not in I^n, for every n
        for n in range(1, 8):
            q = colon_monomial(power_ideal(HUCKABA, n + 1), Monomial2(7, 0))
            m = Monomial2(1, 7 * n - 1)
            assert m in q and m not in power_ideal(HUCKABA, n)

    @pytest.mark.parametrize("E", EXHAUSTIVE_7 + RANDOM_12, ids=str)
    def test_triple_agreement(self, E):
        r = reg_rees(E)
        assert reg_rees_via_rr(E) == r
        assert reg_rees_alternative(E) == r


class TestRegFiber:
    def test_examples(self):
        assert reg_fiber(HUCKABA) == 4
        assert reg_fiber(DEG17) == 4
        assert reg_fiber(GeneratorSet(2, [0, 1, 2])) == 1

    def test_full_power_oracle(self):
        # r_J = 1 and the closure's degree-2 piece is already A at n = 1
        E = GeneratorSet(2, [0, 1, 2])
        assert oracles.reduction_number(E.A, 2) == 1
        assert oracles.saturation_piece(E.A, 2, 1) == {0, 1, 2}


class TestVerdict:
    def test_huckaba(self):
        v = eu_verdict(HUCKABA)
        assert v.eu_equal and v.eu_class is EUClass.NeighborClass and not v.invariance
        assert (v.r_J, v.regR, v.regF, v.s_star, v.e) == (4, 4, 4, 4, 49)

    def test_degree17(self):
        v = eu_verdict(DEG17)
        assert v.eu_equal and v.eu_class is EUClass.NeighborClass and not v.invariance
        assert (v.regR, v.regF, v.s_star) == (4, 4, 4)

    def test_middle(self):
        v = eu_verdict(GeneratorSet(6, [0, 2, 3, 4, 6]))
        assert v.eu_equal and v.regR == v.regF == v.r_J and v.eu_class is EUClass.MiddleClass

    def test_classes(self):
        assert classes_of(GeneratorSet(5, [0, 5])) == {EUClass.Parameter}
        assert classes_of(GeneratorSet(7, [0, 2, 6, 7])) == {EUClass.NeighborClass}
        assert classes_of(GeneratorSet(7, [0, 2, 5, 7])) == {EUClass.General}
        both = classes_of(GeneratorSet(6, [0, 1, 2, 6]))
        assert both == {EUClass.MiddleClass, EUClass.NeighborClass}
        assert most_specific(both) is EUClass.MiddleClass
        assert most_specific(classes_of(GeneratorSet(6, [0, 1, 6]))) is EUClass.ThreeGenerator

    def test_result_invariant(self):
        with pytest.raises(InternalCheckError):
            RegularityResult(2, 1, 1, 4, True, EUClass.General, frozenset(), False, 1)


class TestFormulas:
    @pytest.mark.parametrize("d", range(2, 13))
    def test_three_generator(self, d):
        for a in range(1, d):
            E = GeneratorSet(d, [0, a, d])
            want = d // gcd(a, d) - 1
            assert three_generator_regularity(d, a) == want
            assert reg_rees(E) == reg_fiber(E) == want

    @pytest.mark.parametrize("E", EXHAUSTIVE_7 + RANDOM_12, ids=str)
    def test_inequalities_and_max_formulas(self, E):
        r = reduction_number(E)
        R = reg_rees(E)
        F = reg_fiber(E, R)
        idx = rr_indices(E, R, F)
        assert r <= F <= R <= safe_cap(E.d)
        if E.is_parameter:
            assert R == 0 and idx.s_star == 1
        else:
            assert R == max(r, idx.s_star)
            assert F == max(r, idx.s_ini)
        cls = classes_of(E)
        if EUClass.MiddleClass in cls:
            assert R == F == r
        if EUClass.NeighborClass in cls:
            assert R == F

    @pytest.mark.parametrize("E", EXHAUSTIVE_7 + RANDOM_12[:50], ids=str)
    def test_reduction_identity(self, E):
        r = reduction_number(E)
        for n in range(r, reg_rees(E) + 3):
            assert reduction_identity_holds(E, n, r)

    def test_reduction_identity_domain(self):
        with pytest.raises(ValueError):
            reduction_identity_holds(HUCKABA, 2)
