"""Regularity of the Rees algebra and fiber ring of an equal-degree monomial ideal.

``reg R(I)`` is computed three ways:

* :func:`reg_rees` -- least ``n >= r_J`` with ``I^(n+1) : f = I^n`` for the
  superficial element ``f = x^d + y^d``.  No Ratliff-Rush closure involved.
* :func:`reg_rees_via_rr` -- least ``n >= r_J`` where the closure of ``I^n``
  is ``I^n``.
* :func:`reg_rees_alternative` -- least ``n >= r`` with
  ``I^n : I^(n-r)`` equal to the closure of ``I^r``.

The last two take closures at the hard cap of :func:`safe_cap` so that they
do not depend on the first.

The monomial ``x^d`` cannot serve as ``f``: it is not superficial in general.
For ``I = (x^7, x^6y, x^2y^5, y^7)`` the monomial ``x y^(7n-1)`` lies in
``I^(n+1) : x^7`` but not in ``I^n`` for every ``n``.  The bad locus of
superficial elements in ``span(x^d, y^d)`` is invariant under the torus
``(x, y) -> (s x, t y)``, which preserves ``I``, so it misses the open orbit
containing ``x^d + y^d`` (characteristic zero).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from . import _kernels
from .equigen import GeneratorSet, power_ideal, pred_table, reduction_number, sumset_power
from .errors import InternalCheckError
from .ratliff_rush import initial_piece, rr_closure, rr_indices
from .staircase import Monomial2, colon_ideal, colon_monomial, ideal_sum, scale


class EUClass(enum.Enum):
    Parameter = "parameter"
    ThreeGenerator = "three-generator"
    MiddleClass = "middle"
    NeighborClass = "neighbor"
    General = "general"


# most specific first
_SPECIFICITY = [EUClass.Parameter, EUClass.ThreeGenerator, EUClass.MiddleClass, EUClass.NeighborClass]


@dataclass(frozen=True)
class RegularityResult:
    r_J: int
    regR: int
    regF: int
    e: int
    eu_equal: bool
    eu_class: EUClass
    classes: frozenset[EUClass]
    invariance: bool
    s_star: int

    def __post_init__(self):
        if not self.regR >= self.regF >= self.r_J:
            raise InternalCheckError(f"regR >= regF >= r_J violated: {self}")


def safe_cap(d: int) -> int:
    """Proven upper bound on ``reg R(I)``: ``e^2 - e`` with ``e = d^2``.

    This is the two-dimensional Cohen-Macaulay case of the extended-degree
    bound, where ``D(I) = e(I)``.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    e = d * d
    return max(e * e - e, 1)


def superficial_colon_witness(E: GeneratorSet, n: int):
    """A monomial position ``(D, k)`` of an element of ``(I^(n+1) : (x^d+y^d)) \\ I^n``, or None."""
    d = E.d
    pn = pred_table(E.bits(n), n * d)
    pn1 = pred_table(E.bits(n + 1), (n + 1) * d)
    return _kernels.colon_witness(pn, pn1, n, d)


def reg_rees(E: GeneratorSet) -> int:
    if E.is_parameter:
        return 0
    cap = safe_cap(E.d)
    n = reduction_number(E, cap)
    while superficial_colon_witness(E, n) is not None:
        n += 1
        if n > cap:
            raise InternalCheckError(f"reg R of {E} exceeds the cap {cap}")
    return n


def reg_rees_via_rr(E: GeneratorSet) -> int:
    cap = safe_cap(E.d)
    n = reduction_number(E, cap)
    if n == 0:
        return 0
    while rr_closure(E, n, cap).closure != power_ideal(E, n):
        n += 1
        if n > cap:
            raise InternalCheckError(f"reg R of {E} exceeds the cap {cap}")
    return n


def reg_rees_alternative(E: GeneratorSet) -> int:
    cap = safe_cap(E.d)
    r = reduction_number(E, cap)
    if r == 0:
        return 0
    target = rr_closure(E, r, cap).closure
    n = r
    while colon_ideal(power_ideal(E, n), power_ideal(E, n - r)) != target:
        n += 1
        if n > cap:
            raise InternalCheckError(f"reg R of {E} exceeds the cap {cap}")
    return n


def reg_fiber(E: GeneratorSet, regR: int | None = None) -> int:
    """Least ``n >= r_J`` whose closure agrees with ``I^n`` in degree ``nd``."""
    if E.is_parameter:
        return 0
    if regR is None:
        regR = reg_rees(E)
    n = reduction_number(E)
    while initial_piece(E, n, regR) != sumset_power(E, n):
        n += 1
        if n > regR:
            raise InternalCheckError(f"reg F of {E} exceeds reg R = {regR}")
    return n


def classes_of(E: GeneratorSet) -> frozenset[EUClass]:
    d, A = E.d, E.A
    if E.is_parameter:
        return frozenset({EUClass.Parameter})
    out = set()
    inner = sorted(A - {0, d})
    if inner[-1] - inner[0] + 1 == len(inner):
        out.add(EUClass.MiddleClass)
    if len(A) == 3:
        out.add(EUClass.ThreeGenerator)
    # x^(d-1) y in I, or x y^(d-1) after swapping the variables
    if d >= 2 and (1 in A or d - 1 in A):
        out.add(EUClass.NeighborClass)
    return frozenset(out or {EUClass.General})


def most_specific(classes: frozenset[EUClass]) -> EUClass:
    for c in _SPECIFICITY:
        if c in classes:
            return c
    return EUClass.General


def eu_verdict(E: GeneratorSet) -> RegularityResult:
    r = reduction_number(E)
    regR = reg_rees(E)
    regF = reg_fiber(E, regR)
    idx = rr_indices(E, regR, regF)
    classes = classes_of(E)
    return RegularityResult(
        r_J=r,
        regR=regR,
        regF=regF,
        e=E.d * E.d,
        eu_equal=regR == regF,
        eu_class=most_specific(classes),
        classes=classes,
        invariance=idx.s_star < r,
        s_star=idx.s_star,
    )


def three_generator_regularity(d: int, a: int) -> int:
    """``d / gcd(a, d) - 1`` for ``I = (x^d, x^(d-a) y^a, y^d)``."""
    return d // gcd(a, d) - 1


def reduction_identity_holds(E: GeneratorSet, n: int, r: int | None = None) -> bool:
    """``I^(n+1) : x^d == I^n + y^((n-r)d) (I^(r+1) : x^d)`` for ``n >= r = r_J``."""
    if r is None:
        r = reduction_number(E)
    if n < r:
        raise ValueError("identity is stated for n >= r_J")
    d = E.d
    xd = Monomial2(d, 0)
    lhs = colon_monomial(power_ideal(E, n + 1), xd)
    tail = scale(colon_monomial(power_ideal(E, r + 1), xd), Monomial2(0, (n - r) * d))
    return lhs == ideal_sum(power_ideal(E, n), tail)
