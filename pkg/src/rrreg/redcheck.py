"""Reductions of ``I`` by arbitrary pairs of degree-``d`` forms.

``J' = (f, g)`` with ``f, g`` in ``I_d`` is a reduction with ``J' I^n = I^(n+1)``
iff the products ``f*m, g*m`` (``m`` running over the monomials of
``(I^n)_(nd)``) span ``(I^(n+1))_((n+1)d)``.  That is a rank condition on
an integer matrix, decided exactly.

Exact rank over Q uses two steps.  Rank mod a prime never exceeds the
rational rank, so a full rank mod ``2^31 - 1`` is already a proof.  Only
rank-deficient cases go through fraction-free (Bareiss) elimination over
the integers.  A finite-field mode (``field=p``) skips the exact step.  It
can disagree with characteristic 0 for small ``p``.
"""

from __future__ import annotations

import random
from array import array
from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Mapping, Sequence

from . import _kernels
from .equigen import GeneratorSet, sumset_power
from .errors import DegenerateReductionError, FormsNotInIdealError, InputError, InternalCheckError
from .staircase import format_monomial

FILTER_PRIME = 2147483647


@dataclass(frozen=True)
class HomogeneousForm2:
    """``sum c_a x^(d-a) y^a`` with rational coefficients."""

    d: int
    terms: tuple[tuple[int, Fraction], ...]

    def __init__(self, d: int, coeffs: Mapping[int, object]):
        items = []
        for a, c in sorted(coeffs.items()):
            c = Fraction(c)
            if not 0 <= a <= d:
                raise InputError(f"exponent {a} outside 0..{d}")
            if c:
                items.append((int(a), c))
        if not items:
            raise DegenerateReductionError("zero form")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "terms", tuple(items))

    @classmethod
    def monomial(cls, d: int, a: int) -> HomogeneousForm2:
        return cls(d, {a: 1})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self.terms)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.terms)

    def integer_coeffs(self) -> dict[int, int]:
        """The coefficients scaled by a common denominator (same ideal)."""
        den = lcm(*(c.denominator for _, c in self.terms))
        return {a: int(c * den) for a, c in self.terms}

    def __str__(self) -> str:
        out = []
        for a, c in self.terms:
            mono = format_monomial(self.d - a, a)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono if mag == 1 else f"{mag}*{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s


def _mod_coeff(c: Fraction, p: int) -> int:
    if c.denominator % p == 0:
        raise InputError(f"coefficient {c} is undefined modulo {p}")
    return c.numerator * pow(c.denominator, -1, p) % p


def _flat(rows: Sequence[Sequence[int]]) -> array:
    buf = array("q")
    for r in rows:
        buf.extend(r)
    return buf


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free elimination."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    m, n = len(M), len(M[0])
    rank, prev = 0, 1
    for c in range(n):
        piv = next((i for i in range(rank, m) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pr = M[rank]
        pc = pr[c]
        for i in range(rank + 1, m):
            row = M[i]
            f = row[c]
            for j in range(c + 1, n):
                row[j] = (pc * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = pc
        rank += 1
        if rank == m:
            break
    return rank


def matrix_rank(rows: Sequence[Sequence[int]], field: str | int = "q") -> int:
    """Rank of an integer matrix over Q (``field='q'``) or over GF(p)."""
    if not rows:
        return 0
    ncols = len(rows[0])
    if field != "q":
        return _kernels.rank_mod_p(_flat(rows), len(rows), ncols, int(field))
    bound = min(len(rows), ncols)
    if all(abs(x) < FILTER_PRIME for r in rows for x in r):
        rp = _kernels.rank_mod_p(_flat(rows), len(rows), ncols, FILTER_PRIME)
        if rp == bound:
            return rp
    return bareiss_rank(rows)


@dataclass(frozen=True)
class GradedSubspace:
    """A subspace of the degree-``degree`` forms, in reduced row-echelon form.

    Coordinates index the monomials ``x^(degree-a) y^a`` by ``a``.
    """

    degree: int
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def basis_dim(self) -> int:
        return self.degree + 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    @classmethod
    def span(cls, degree: int, vectors) -> GradedSubspace:
        M = [[Fraction(x) for x in v] for v in vectors]
        for v in M:
            if len(v) != degree + 1:
                raise ValueError("vector length must be degree + 1")
        rows = []
        r = 0
        ncols = degree + 1
        for c in range(ncols):
            piv = next((i for i in range(r, len(M)) if M[i][c]), None)
            if piv is None:
                continue
            M[r], M[piv] = M[piv], M[r]
            inv = 1 / M[r][c]
            M[r] = [x * inv for x in M[r]]
            for i in range(len(M)):
                if i != r and M[i][c]:
                    f = M[i][c]
                    M[i] = [x - f * y for x, y in zip(M[i], M[r])]
            r += 1
        rows = tuple(tuple(v) for v in M[:r])
        return cls(degree, rows)

    def contains(self, vector) -> bool:
        v = [Fraction(x) for x in vector]
        for row in self.rows:
            c = next(k for k, x in enumerate(row) if x)
            if v[c]:
                f = v[c]
                v = [x - f * y for x, y in zip(v, row)]
        return not any(v)


def sylvester_rows(cf: Mapping[int, int], cg: Mapping[int, int], d: int) -> list[list[int]]:
    """Sylvester matrix (size ``2d``) of two binary forms of degree ``d``, given by coefficients."""
    rows = []
    for c in (cf, cg):
        for k in range(d):
            row = [0] * (2 * d)
            for a, v in c.items():
                row[k + a] = v
            rows.append(row)
    return rows


def _prepare(E: GeneratorSet, f: HomogeneousForm2, g: HomogeneousForm2, field):
    for form in (f, g):
        if form.d != E.d:
            raise InputError(f"form {form} has degree {form.d}, expected {E.d}")
        if not form.support <= E.A:
            raise FormsNotInIdealError(f"form {form} is not in I: support {sorted(form.support - E.A)} outside A")
    if field != "q":
        p = int(field)
        cf = {a: _mod_coeff(c, p) for a, c in f.terms}
        cg = {a: _mod_coeff(c, p) for a, c in g.terms}
    else:
        cf, cg = f.integer_coeffs(), g.integer_coeffs()
    syl = sylvester_rows(cf, cg, E.d)
    if matrix_rank(syl, field) < 2 * E.d:
        raise DegenerateReductionError(f"({f}, {g}) is not a system of parameters (resultant 0)")
    return cf, cg


def _reduces_at(E: GeneratorSet, cf: dict, cg: dict, n: int, field) -> bool:
    target = sorted(sumset_power(E, n + 1))
    col = {c: k for k, c in enumerate(target)}
    rows = []
    for c in sorted(sumset_power(E, n)):
        for coeffs in (cf, cg):
            row = [0] * len(target)
            for a, v in coeffs.items():
                row[col[a + c]] = v
            rows.append(row)
    return matrix_rank(rows, field) == len(target)


def is_reduction_at(E: GeneratorSet, f: HomogeneousForm2, g: HomogeneousForm2, n: int, field="q") -> bool:
    """Does ``(f, g) I^n = I^(n+1)`` hold?"""
    cf, cg = _prepare(E, f, g, field)
    return _reduces_at(E, cf, cg, n, field)


def reduction_number_of(E: GeneratorSet, f: HomogeneousForm2, g: HomogeneousForm2, cap: int, field="q") -> int | None:
    """Least ``n <= cap`` with ``(f, g) I^n = I^(n+1)``; ``None`` if there is none."""
    cf, cg = _prepare(E, f, g, field)
    for n in range(cap + 1):
        if _reduces_at(E, cf, cg, n, field):
            return n
    return None


@dataclass
class ReductionSample:
    trials: int
    rejected: int
    histogram: dict[int, int]
    anchor_r: int
    s_star: int
    regR: int
    min_r: int | None = None
    max_r: int | None = None
    watch: bool = False
    sweep_pairs: int = 0
    sweep_complete: bool = False
    sweep_max: int | None = None
    note: str = ""
    seeds: list[str] = dc_field(default_factory=list, repr=False)

    @property
    def lower_bound_br(self) -> int:
        vals = [self.anchor_r] + [v for v in (self.max_r, self.sweep_max) if v is not None]
        return max(vals)


def random_form(E: GeneratorSet, rng: random.Random, lo: int = -3, hi: int = 3) -> HomogeneousForm2 | None:
    c = {a: rng.randint(lo, hi) for a in sorted(E.A)}
    if not any(c.values()):
        return None
    return HomogeneousForm2(E.d, c)


def _canonical_span(cf: Sequence[int], cg: Sequence[int]):
    sp = GradedSubspace.span(len(cf) - 1, [cf, cg])
    return sp.rows


def sample_reductions(
    E: GeneratorSet,
    trials: int,
    seed: int,
    field="q",
    regR: int | None = None,
    s_star: int | None = None,
    sweep_limit: int = 2000,
) -> ReductionSample:
    """Reduction numbers of ``trials`` random minimal reductions of ``I``.

    The monomial reduction ``(x^d, y^d)`` is always evaluated as an anchor
    (``anchor_r``) and counted in the histogram.  The largest value seen is
    a lower bound for the big reduction number.  If it stays below ``s*``
    a sweep over spans of coefficient vectors in ``[-2, 2]`` follows, and
    anything still below is reported for manual inspection, never as a
    counterexample.
    """
    from .regularity import reg_rees, reg_fiber
    from .ratliff_rush import rr_indices
    from .equigen import reduction_number

    if regR is None:
        regR = reg_rees(E)
    if s_star is None:
        s_star = rr_indices(E, regR, reg_fiber(E, regR)).s_star
    cap = regR + 1
    anchor = reduction_number(E)
    hist: Counter = Counter({anchor: 1})
    out = ReductionSample(trials=trials, rejected=0, histogram={}, anchor_r=anchor, s_star=s_star, regR=regR)
    drawn = []
    for trial in range(trials):
        attempt = 0
        while True:
            key = f"{seed}:{trial}:{attempt}"
            rng = random.Random(key)
            f, g = random_form(E, rng), random_form(E, rng)
            attempt += 1
            if f is None or g is None:
                out.rejected += 1
                continue
            try:
                r = reduction_number_of(E, f, g, cap, field)
            except DegenerateReductionError:
                out.rejected += 1
                continue
            break
        if r is None:
            raise InternalCheckError(f"sampled reduction ({f}, {g}) of {E} has no reduction number <= {cap}")
        out.seeds.append(key)
        drawn.append(r)
        hist[r] += 1
    out.histogram = dict(sorted(hist.items()))
    if drawn:
        out.min_r, out.max_r = min(drawn), max(drawn)
    if E.is_parameter:
        # br = 0 < 1 = s* trivially; the conjecture is about non-parameter ideals
        out.note = "parameter ideal: outside the scope of the br conjecture"
    elif out.lower_bound_br < s_star:
        _sweep(E, out, cap, field, sweep_limit)
        out.watch = out.lower_bound_br < s_star
        if out.watch:
            out.note = "needs exhaustive verification"
    return out


def _sweep(E: GeneratorSet, out: ReductionSample, cap: int, field, limit: int) -> None:
    A = sorted(E.A)
    seen = set()
    best = None
    vectors = [v for v in product(range(-2, 3), repeat=len(A)) if any(v)]
    complete = True
    for u in vectors:
        for v in vectors:
            cu = [0] * (E.d + 1)
            cv = [0] * (E.d + 1)
            for a, x in zip(A, u):
                cu[a] = x
            for a, x in zip(A, v):
                cv[a] = x
            key = _canonical_span(cu, cv)
            if len(key) < 2 or key in seen:
                continue
            if len(seen) >= limit:
                complete = False
                break
            seen.add(key)
            f = HomogeneousForm2(E.d, dict(zip(A, u)))
            g = HomogeneousForm2(E.d, dict(zip(A, v)))
            try:
                r = reduction_number_of(E, f, g, cap, field)
            except DegenerateReductionError:
                continue
            if r is not None and (best is None or r > best):
                best = r
        if not complete:
            break
    out.sweep_pairs = len(seen)
    out.sweep_complete = complete
    out.sweep_max = best
