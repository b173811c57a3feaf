import pytest

import oracles
from conftest import DEG17, EXHAUSTIVE_7, HUCKABA, RANDOM_12
from rrreg.equigen import GeneratorSet, sumset_power
from rrreg.errors import InternalCheckError
from rrreg.ratliff_rush import initial_piece
from rrreg.regularity import reg_rees
from rrreg.semigroup import SemigroupProfile, classify, gaps, h1_dimensions, initial_regularity


def test_middle_class_is_cm():
    E = GeneratorSet(8, [0, 3, 4, 5, 8])
    assert h1_dimensions(E) == []
    assert classify(E).is_cm


def test_parameter_is_cm():
    E = GeneratorSet(6, [0, 6])
    assert h1_dimensions(E) == []
    p = classify(E)
    assert p.is_cm and p.is_buchsbaum and p.s_ini == 1


def test_degree17_frozen():
    # values from the saturation oracle
    h1 = h1_dimensions(DEG17)
    assert h1 == [10, 7, 1]
    assert h1[3 - 1] >= 1
    p = classify(DEG17)
    assert not p.is_cm
    assert p.is_buchsbaum is False is oracles.buchsbaum(DEG17.A, 17, 3)


def test_huckaba_frozen():
    p = classify(HUCKABA)
    assert p.h1 == (1, 2, 1) and p.s_ini == 4
    assert p.is_buchsbaum is oracles.buchsbaum(HUCKABA.A, 7, 3) is False


def test_profile_invariant():
    with pytest.raises(InternalCheckError):
        SemigroupProfile(HUCKABA, 1, (1,), True, True)


@pytest.mark.parametrize("E", EXHAUSTIVE_7 + RANDOM_12[:80], ids=str)
def test_properties(E):
    r = reg_rees(E)
    p = classify(E, r)
    s_ini = initial_regularity(E, r)
    assert p.s_ini == s_ini
    assert list(p.h1) == h1_dimensions(E, r)
    assert p.is_cm == (s_ini == 1) == (not any(p.h1))
    if p.is_cm:
        assert p.is_buchsbaum
    for n in range(1, r + 3):
        En = initial_piece(E, n, r)
        assert sumset_power(E, n) <= En
        assert {c + a for c in En for a in E.A} <= initial_piece(E, n + 1, r)
        if n >= s_ini:
            assert not gaps(E, n, r)
        if n < s_ini:
            assert p.h1[n - 1] == len(En - sumset_power(E, n))


@pytest.mark.parametrize("E", EXHAUSTIVE_7, ids=str)
def test_buchsbaum_matches_multistep_oracle(E):
    p = classify(E)
    assert p.is_buchsbaum == oracles.buchsbaum(E.A, E.d, max(p.s_ini - 1, 0))
