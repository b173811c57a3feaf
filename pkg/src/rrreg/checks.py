"""Named consistency checks on one ideal, shared by ``verify`` and the explorer.

Each check returns ``True``/``False``, or ``None`` when it does not apply to
the ideal (class-specific checks).  All of them are proven statements, so a
failure is a bug.  :func:`br_watch` is different: a search aid for an open
question, which can only flag cases for inspection.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable

from .equigen import GeneratorSet, power_ideal, sumset_power
from .errors import InternalCheckError
from .ratliff_rush import chain_colon, chain_colon_staircase, initial_piece, rr_closure
from .redcheck import HomogeneousForm2, reduction_number_of, sample_reductions
from .regularity import (
    EUClass,
    classes_of,
    reduction_identity_holds,
    reg_rees_alternative,
    reg_rees_via_rr,
    safe_cap,
)
from .report import AnalysisReport, analyze
from .staircase import colon_ideal


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    fn: Callable[[GeneratorSet, AnalysisReport], bool | None]


def _triple(E, rep):
    return reg_rees_via_rr(E) == rep.regR and reg_rees_alternative(E) == rep.regR


def _chain(E, rep):
    return rep.r_J <= rep.regF <= rep.regR <= safe_cap(E.d)


def _max_formula(E, rep):
    if E.is_parameter:
        return rep.regR == rep.regF == 0 and rep.s_star == 1
    return rep.regR == max(rep.r_J, rep.s_star) and rep.regF == max(rep.r_J, rep.s_ini)


def _indices(E, rep):
    return rep.s <= max(rep.regR - 1, 0) and rep.s_ini <= rep.s_star <= max(rep.regR, 1)


def _reduction_identity(E, rep):
    return all(reduction_identity_holds(E, n, rep.r_J) for n in range(rep.r_J, rep.regR + 3))


def _colon_stability(E, rep):
    I = power_ideal(E, 1)
    return all(colon_ideal(power_ideal(E, n + 1), I) == power_ideal(E, n) for n in (rep.regR, rep.regR + 1))


def _closure_cross(E, rep):
    """Closure three ways: windowed chain, literal chain colon, and ``I^(n+t) : I^t``."""
    for n in range(1, max(rep.regR, 1) + 2):
        t = max(rep.regR - n, 0)
        c = rr_closure(E, n, rep.regR).closure
        if chain_colon_staircase(E, n, t) != c:
            return False
        if colon_ideal(power_ideal(E, n + t), power_ideal(E, t)) != c:
            return False
        if not power_ideal(E, n).issubset(c) or chain_colon(E, n, 0) != power_ideal(E, n):
            return False
    return True


def _middle(E, rep):
    if EUClass.MiddleClass not in classes_of(E):
        return None
    if not rep.regR == rep.regF == rep.r_J:
        return False
    return all(rr_closure(E, n, rep.regR).closure == power_ideal(E, n) for n in range(1, rep.regR + 3))


def _neighbor(E, rep):
    if EUClass.NeighborClass not in classes_of(E):
        return None
    return rep.regR == rep.regF


def _threegen(E, rep):
    if len(E.A) != 3:
        return None
    a = sorted(E.A)[1]
    v = E.d // gcd(a, E.d) - 1
    return rep.regR == rep.regF == v


def _semigroup(E, rep):
    prev = None
    for n in range(1, max(rep.regR, 1) + 2):
        En = initial_piece(E, n, rep.regR)
        if not sumset_power(E, n) <= En:
            return False
        gap = En != sumset_power(E, n)
        if (n >= rep.s_ini and gap) or (n == rep.s_ini - 1 and not gap):
            return False
        if n - 1 < len(rep.h1) and rep.h1[n - 1] != len(En - sumset_power(E, n)):
            return False
        if prev is not None and not {c + a for c in prev for a in E.A} <= En:
            return False
        prev = En
    return True


def _redcheck_oracle(E, rep):
    f = HomogeneousForm2.monomial(E.d, 0)
    g = HomogeneousForm2.monomial(E.d, E.d)
    return reduction_number_of(E, f, g, rep.regR + 1) == rep.r_J


def sampled_consistency(sample, rep) -> bool:
    """Every sampled reduction number above ``s*`` must equal ``reg R``."""
    return all(r == rep.regR for r in sample.histogram if r > rep.s_star)


CHECKS: dict[str, Check] = {
    c.name: c
    for c in [
        Check("triple", "reg R agrees across the colon, closure and I^n:I^(n-r) formulas", _triple),
        Check("chain", "r_J <= reg F <= reg R <= cap", _chain),
        Check("max_formula", "reg R = max(r_J, s*) and reg F = max(r_J, s*_ini)", _max_formula),
        Check("indices", "s <= max(reg R - 1, 0) and s*_ini <= s* <= max(reg R, 1)", _indices),
        Check("reduction_identity", "I^(n+1):x^d = I^n + y^((n-r)d) (I^(r+1):x^d) for n in [r, reg R + 2]", _reduction_identity),
        Check("colon_stability", "I^(n+1) : I = I^n for n = reg R, reg R + 1", _colon_stability),
        Check("closure_cross", "closure agrees across three independent computations", _closure_cross),
        Check("middle", "middle class: reg R = reg F = r_J and closures trivial", _middle),
        Check("neighbor", "neighbor class: reg R = reg F", _neighbor),
        Check("threegen", "three generators: reg R = reg F = d/gcd(a, d) - 1", _threegen),
        Check("semigroup", "nA in E_n, E_n + A in E_(n+1), gaps match s*_ini and h1", _semigroup),
        Check("redcheck_oracle", "linear-algebra reduction number of (x^d, y^d) equals r_J", _redcheck_oracle),
    ]
}

DEFAULT_CHECKS = tuple(CHECKS)


def run_checks(E: GeneratorSet, names=DEFAULT_CHECKS, rep: AnalysisReport | None = None) -> dict[str, str]:
    """``{name: 'pass' | 'fail' | 'n/a'}``; a check that raises counts as a failure."""
    if rep is None:
        rep = analyze(E)
    out = {}
    for name in names:
        try:
            ok = CHECKS[name].fn(E, rep)
        except InternalCheckError:
            ok = False
        out[name] = "n/a" if ok is None else "pass" if ok else "fail"
    return out


def br_watch(E: GeneratorSet, rep: AnalysisReport, trials: int, seed: int, field="q") -> dict:
    """Sample reductions; flag ``s*`` above every sampled reduction number."""
    smp = sample_reductions(E, trials, seed, field=field, regR=rep.regR, s_star=rep.s_star)
    return {
        "histogram": {str(k): v for k, v in smp.histogram.items()},
        "rejected": smp.rejected,
        "lower_bound_br": smp.lower_bound_br,
        "s_star": rep.s_star,
        "watch": smp.watch,
        "sweep_pairs": smp.sweep_pairs,
        "note": smp.note,
        "consistent": sampled_consistency(smp, rep),
    }
