from fractions import Fraction

import pytest

from conftest import HUCKABA
from rrreg.errors import (
    IdealSyntaxError,
    InputError,
    NotEqualDegreeError,
    NotMPrimaryError,
)
from rrreg.parsing import parse_form, parse_form_pair, parse_ideal, parse_monomials


class TestIdeal:
    @pytest.mark.parametrize("text", [
        "x^7, x^6*y, x^2*y^5, y^7",
        "y^7,x^2 y^5,x^6 y,x^7",
        "d=7; a=0,1,5,7",
        " d = 7 ; a = 7,5,1,0 ",
        "x^7,x^6y,x^2y^5,y^7",
        "x^7, y*x^6, y^5*x^2, y^7, x^6*y",
    ])
    def test_equivalent_spellings(self, text):
        spec = parse_ideal(text)
        assert spec.resolved == HUCKABA and spec.d == 7 and spec.A == HUCKABA.A
        assert spec.source == text

    def test_maximal_ideal_power(self):
        assert parse_ideal("x^2,xy,y^2").A == {0, 1, 2}
        assert parse_ideal("x, y").A == {0, 1}

    def test_mixed_degrees(self):
        with pytest.raises(NotEqualDegreeError, match=r"\[3, 4\]"):
            parse_ideal("x^4, x*y^2, y^4")

    def test_not_m_primary(self):
        with pytest.raises(NotMPrimaryError) as e:
            parse_ideal("x^3, x*y^2")
        assert "missing generator y^3" in str(e.value)
        assert "x^d and y^d" in str(e.value)
        with pytest.raises(NotMPrimaryError):
            parse_ideal("d=4; a=1,4")
        with pytest.raises(NotMPrimaryError):
            parse_ideal("d=4; a=0,5,4")

    @pytest.mark.parametrize("text, pos", [
        ("x^7, z, y^7", 5),
        ("x^7,, y^7", 4),
        ("x^, y", 2),
        ("x^2 x, y^3", 4),
        ("", 0),
        ("d=7; a=", 0),
    ])
    def test_syntax_errors_locate(self, text, pos):
        with pytest.raises(IdealSyntaxError) as e:
            parse_ideal(text)
        assert e.value.pos == pos
        if not text:
            return
        lines = str(e.value).splitlines()
        assert lines[-2].endswith(text) and lines[-1].index("^") - lines[-2].index(text) == pos

    def test_errors_are_input_errors(self):
        for cls in (IdealSyntaxError, NotEqualDegreeError, NotMPrimaryError):
            assert issubclass(cls, InputError) and issubclass(cls, ValueError)

    def test_monomials(self):
        assert parse_monomials("x^2*y^3, y") == [(2, 3), (0, 1)]


class TestForms:
    def test_basic(self):
        f = parse_form("x^6*y + y^7")
        assert f.d == 7 and f.coeffs == {1: 1, 7: 1}

    def test_coefficients_and_signs(self):
        f = parse_form("-3/2*x^2 - x*y + 5 y^2")
        assert f.coeffs == {0: Fraction(-3, 2), 1: -1, 2: 5}
        assert parse_form("2x^3 + 1/3*y^3").coeffs == {0: 2, 3: Fraction(1, 3)}

    def test_like_terms_combine(self):
        assert parse_form("x*y + 2*x*y - x^2", 2).coeffs == {0: -1, 1: 3}

    def test_errors(self):
        with pytest.raises(IdealSyntaxError):
            parse_form("x^2 + x^3")
        with pytest.raises(IdealSyntaxError):
            parse_form("x^2 y x")
        with pytest.raises(IdealSyntaxError):
            parse_form("x^2 + 1/0*y^2")
        with pytest.raises(IdealSyntaxError):
            parse_form("x^3", 2)
        with pytest.raises(InputError):
            parse_form("5")
        with pytest.raises(InputError):
            parse_form("x*y - x*y")

    def test_pair(self):
        f, g = parse_form_pair("x^7 | x^6*y + y^7", 7)
        assert f.coeffs == {0: 1} and g.coeffs == {1: 1, 7: 1}
        with pytest.raises(IdealSyntaxError):
            parse_form_pair("x^7", 7)
        with pytest.raises(IdealSyntaxError):
            parse_form_pair("x^7 | y^7 | y^7", 7)
