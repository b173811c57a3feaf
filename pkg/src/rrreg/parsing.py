"""Text formats for ideals and forms.

Ideals::

    x^7, x^6*y, x^2*y^5, y^7
    d=7; a=0,1,5,7

Forms (two of them, separated by ``|`` in the CLI)::

    x^6*y + y^7
    3/2*x^2 - x*y + 5*y^2

Whitespace is ignored everywhere.  Only the variables ``x`` and ``y`` exist.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .equigen import GeneratorSet
from .errors import IdealSyntaxError, InputError, NotEqualDegreeError, NotMPrimaryError
from .redcheck import HomogeneousForm2

_DA = re.compile(r"d=(\d+);a=(\d+(?:,\d+)*)$")


@dataclass(frozen=True)
class IdealSpec:
    source: str
    resolved: GeneratorSet

    @property
    def d(self) -> int:
        return self.resolved.d

    @property
    def A(self) -> frozenset[int]:
        return self.resolved.A


class _Scanner:
    """Cursor over the input with positions reported in the original text."""

    def __init__(self, text: str):
        self.text = text
        self.chars = [(k, c) for k, c in enumerate(text) if not c.isspace()]
        self.k = 0

    def peek(self) -> str:
        return self.chars[self.k][1] if self.k < len(self.chars) else ""

    def pos(self) -> int:
        return self.chars[self.k][0] if self.k < len(self.chars) else len(self.text)

    def take(self) -> str:
        c = self.peek()
        self.k += 1
        return c

    def fail(self, msg: str):
        raise IdealSyntaxError(msg, self.text, self.pos())

    def expect(self, c: str):
        if self.peek() != c:
            self.fail(f"expected {c!r}" + (f", found {self.peek()!r}" if self.peek() else ", found end of input"))
        self.take()

    def integer(self) -> int:
        if not self.peek().isdigit():
            self.fail("expected an integer")
        s = ""
        while self.peek().isdigit():
            s += self.take()
        return int(s)

    def monomial(self) -> tuple[int, int]:
        """``factor (['*'] factor)*`` with ``factor := ('x' | 'y') ['^' int]``."""
        exps = {"x": 0, "y": 0}
        seen = set()
        while True:
            v = self.peek()
            if v not in exps:
                self.fail("expected x or y")
            if v in seen:
                self.fail(f"variable {v} repeated")
            seen.add(v)
            self.take()
            e = 1
            if self.peek() == "^":
                self.take()
                e = self.integer()
            exps[v] = e
            if self.peek() == "*" and self._next_is_var():
                self.take()
                continue
            if self.peek() in ("x", "y"):
                continue
            return exps["x"], exps["y"]

    def _next_is_var(self) -> bool:
        return self.k + 1 < len(self.chars) and self.chars[self.k + 1][1] in "xy"

    def at_end(self) -> bool:
        return self.k >= len(self.chars)


def parse_monomials(text: str) -> list[tuple[int, int]]:
    s = _Scanner(text)
    if s.at_end():
        s.fail("empty ideal")
    out = [s.monomial()]
    while not s.at_end():
        s.expect(",")
        out.append(s.monomial())
    return out


def parse_ideal(text: str) -> IdealSpec:
    """Parse either a list of monomials or ``d=<int>; a=<ints>``."""
    compact = "".join(text.split())
    if compact.startswith("d="):
        m = _DA.match(compact)
        if not m:
            raise IdealSyntaxError("expected 'd=<int>; a=<int>,<int>,...'", text, 0)
        d = int(m.group(1))
        A = [int(a) for a in m.group(2).split(",")]
        bad = [a for a in A if a > d]
        if bad:
            raise NotMPrimaryError(f"exponents {bad} exceed d={d}")
        return IdealSpec(text, _resolve(d, A))
    monos = parse_monomials(text)
    degrees = sorted({i + j for i, j in monos})
    if len(degrees) > 1:
        raise NotEqualDegreeError(f"not generated in a single degree: found degrees {degrees}")
    d = degrees[0]
    if d == 0:
        raise NotMPrimaryError("the unit ideal is out of scope")
    return IdealSpec(text, _resolve(d, [j for _, j in monos]))


def _resolve(d: int, A) -> GeneratorSet:
    A = set(A)
    missing = [m for m, a in ((f"x^{d}", 0), (f"y^{d}", d)) if a not in A]
    if missing:
        raise NotMPrimaryError(
            f"not m-primary in scope: missing generator {' and '.join(missing)} "
            "(supported: ideals generated in one degree d that contain x^d and y^d)"
        )
    return GeneratorSet(d, A)


def parse_form(text: str, d: int | None = None) -> HomogeneousForm2:
    """``['+'|'-'] term (('+'|'-') term)*``, ``term := [coef ['*']] monomial | coef``.

    ``coef`` is an integer or ``p/q``.  Every term must have degree ``d``
    (the degree of the first term when ``d`` is None).
    """
    s = _Scanner(text)
    coeffs: dict[int, Fraction] = {}
    first = True
    while True:
        sign = 1
        if s.peek() and s.peek() in "+-":
            sign = -1 if s.take() == "-" else 1
        elif not first:
            s.fail("expected '+' or '-'")
        start = s.pos()
        c = Fraction(1)
        if s.peek().isdigit():
            num = s.integer()
            den = 1
            if s.peek() == "/":
                s.take()
                den = s.integer()
                if den == 0:
                    s.fail("zero denominator")
            c = Fraction(num, den)
            if s.peek() == "*":
                s.take()
                i, j = s.monomial()
            elif s.peek() in ("x", "y"):
                i, j = s.monomial()
            else:
                i, j = 0, 0
        else:
            i, j = s.monomial()
        if d is None:
            d = i + j
        elif i + j != d:
            raise IdealSyntaxError(f"term of degree {i + j} in a form of degree {d}", text, start)
        coeffs[j] = coeffs.get(j, Fraction(0)) + sign * c
        first = False
        if s.at_end():
            break
    if d is None or d < 1:
        raise InputError("a form needs positive degree")
    return HomogeneousForm2(d, coeffs)


def parse_form_pair(text: str, d: int) -> tuple[HomogeneousForm2, HomogeneousForm2]:
    parts = text.split("|")
    if len(parts) != 2:
        raise IdealSyntaxError("expected two forms separated by '|'", text, len(text))
    return parse_form(parts[0], d), parse_form(parts[1], d)
