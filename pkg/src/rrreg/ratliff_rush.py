"""Ratliff-Rush filtration of an equal-degree monomial ideal.

For ``J = (x^d, y^d)`` the closure of ``I^n`` is the ascending union of the
chain ``I^(n+t) : (x^td, y^td)``, and it is reached at ``t = reg R(I) - n``
because ``I^(n+t) : I^t`` sits between the chain value and the closure.

Chain values are computed from two windows of sumsets.  Writing ``N = n+t``,
``x^i y^j`` lies in the chain value iff

* ``i >= nd - max{c in NA : c <= j}`` (the ``x^td`` side), and
* ``i >= min{c in N(d-A) : c >= nd - j}`` (the ``y^td`` side),

so only ``NA ∩ [0, nd]`` and its mirror image are needed.  Those windows
stop changing once ``N >= nd``: an element ``<= nd`` is a sum with at most
``nd`` nonzero parts.  Huge ``t`` (such as the hard regularity cap) therefore
cost no more than ``t = nd``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .equigen import GeneratorSet, power_ideal, pred_table, succ_table, sumset_power
from .errors import InternalCheckError
from .staircase import (
    Monomial2,
    MonomialIdeal2,
    colon_ideal,
    colon_monomial,
    from_profile,
    intersect,
)


@dataclass(frozen=True)
class RRFiltrationEntry:
    n: int
    closure: MonomialIdeal2
    t_used: int
    stabilized: bool


@dataclass(frozen=True)
class RRIndices:
    s: int
    s_star: int
    s_ini: int


@lru_cache(maxsize=None)
def _mirror(E: GeneratorSet) -> GeneratorSet:
    return E.reflect()


@lru_cache(maxsize=8192)
def closure_profile(E: GeneratorSet, n: int, t: int) -> tuple[int, ...]:
    """Staircase profile of ``I^(n+t) : (x^td, y^td)`` over ``j = 0..nd``."""
    if n < 1 or t < 0:
        raise ValueError("need n >= 1 and t >= 0")
    w = n * E.d
    M = min(n + t, w)
    pred = pred_table(E.bits(M), w)
    succ = succ_table(_mirror(E).bits(M), w)
    return tuple(max(w - pred[j], succ[w - j]) for j in range(w + 1))


def chain_colon(E: GeneratorSet, n: int, t: int) -> MonomialIdeal2:
    """``I^(n+t) : (x^td, y^td)``."""
    return from_profile(closure_profile(E, n, t))


def chain_colon_staircase(E: GeneratorSet, n: int, t: int) -> MonomialIdeal2:
    """The same chain value through generic staircase arithmetic (slow; for checking)."""
    d = E.d
    big = power_ideal(E, n + t)
    return intersect(colon_monomial(big, Monomial2(t * d, 0)), colon_monomial(big, Monomial2(0, t * d)))


def _bound(E: GeneratorSet, regR: int | None) -> int:
    if regR is None:
        from .regularity import safe_cap

        return safe_cap(E.d)
    return regR


def rr_closure(E: GeneratorSet, n: int, regR: int | None = None) -> RRFiltrationEntry:
    """The closure of ``I^n``, evaluated on the chain at ``t = max(regR - n, 0)``.

    ``regR`` may be any proven upper bound for ``reg R(I)``; ``None`` uses the
    hard cap.
    """
    t = max(_bound(E, regR) - n, 0)
    prof = closure_profile(E, n, t)
    stable = closure_profile(E, n, t + 1) == prof
    if not stable:
        raise InternalCheckError(f"Ratliff-Rush chain of {E} at n={n} still grows after t={t}")
    return RRFiltrationEntry(n, from_profile(prof), t, stable)


def initial_piece(E: GeneratorSet, n: int, regR: int | None = None) -> frozenset[int]:
    """``E_n``: the y-exponents ``c`` with ``x^(nd-c) y^c`` in the closure of ``I^n``."""
    t = max(_bound(E, regR) - n, 0)
    prof = closure_profile(E, n, t)
    nd = n * E.d
    return frozenset(c for c in range(nd + 1) if prof[c] <= nd - c)


def closure_is_power(E: GeneratorSet, n: int, regR: int | None = None) -> bool:
    return rr_closure(E, n, regR).closure == power_ideal(E, n)


def rr_indices(E: GeneratorSet, regR: int, regF: int) -> RRIndices:
    """Ratliff-Rush index ``s``, regularity ``s*`` and initial regularity ``s*_ini``.

    Each is found by scanning down from the top of the range where equality
    is already guaranteed (``max(regR, 1)``, ``max(regF, 1)`` and
    ``max(regR - 1, 0)`` respectively).
    """
    top = max(regR, 1)
    if not closure_is_power(E, top, regR):
        raise InternalCheckError(f"closure of I^{top} differs from I^{top} for {E}")
    s_star = top
    while s_star > 1 and closure_is_power(E, s_star - 1, regR):
        s_star -= 1

    top_f = max(regF, 1)
    if initial_piece(E, top_f, regR) != sumset_power(E, top_f):
        raise InternalCheckError(f"initial piece at n={top_f} differs for {E}")
    s_ini = top_f
    while s_ini > 1 and initial_piece(E, s_ini - 1, regR) == sumset_power(E, s_ini - 1):
        s_ini -= 1

    closure1 = rr_closure(E, 1, regR).closure
    top_s = max(regR - 1, 0)
    if colon_ideal(power_ideal(E, top_s + 1), power_ideal(E, top_s)) != closure1:
        raise InternalCheckError(f"I^(n+1):I^n at n={top_s} is not the closure of I for {E}")
    s = top_s
    while s > 0 and colon_ideal(power_ideal(E, s), power_ideal(E, s - 1)) == closure1:
        s -= 1
    return RRIndices(s=s, s_star=s_star, s_ini=s_ini)
