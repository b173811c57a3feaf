"""Monomial ideals of k[x, y] stored as staircases.

A nonzero monomial ideal in two variables is determined by its minimal
generators, an antichain that we keep sorted with the x-exponent strictly
increasing and the y-exponent strictly decreasing.  Every operation returns
that normal form, so ideal equality is tuple equality.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class Monomial2(NamedTuple):
    """The monomial ``x^i y^j``."""

    i: int
    j: int

    @property
    def degree(self) -> int:
        return self.i + self.j

    def times(self, other: Monomial2) -> Monomial2:
        return Monomial2(self.i + other.i, self.j + other.j)

    def divides(self, other: Monomial2) -> bool:
        return self.i <= other.i and self.j <= other.j

    def __str__(self) -> str:
        return format_monomial(self.i, self.j)


def format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts) or "1"


def _check(raw: Iterable) -> list[Monomial2]:
    out = []
    for m in raw:
        i, j = m
        if i < 0 or j < 0:
            raise ValueError(f"negative exponent in monomial {(i, j)}")
        out.append(Monomial2(int(i), int(j)))
    return out


@dataclass(frozen=True)
class MonomialIdeal2:
    """A nonzero monomial ideal given by its minimal generators in staircase order."""

    gens: tuple[Monomial2, ...]

    def __post_init__(self):
        g = self.gens
        if not g:
            raise ValueError("the zero ideal is not representable")
        for a, b in zip(g, g[1:]):
            if not (a.i < b.i and a.j > b.j):
                raise ValueError(f"generators not in staircase normal form: {a}, {b}")
        if g[0].i < 0 or g[-1].j < 0:
            raise ValueError("negative exponent")

    def __contains__(self, m) -> bool:
        return contains(self, Monomial2(*m))

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    @property
    def is_unit(self) -> bool:
        return self.gens[0] == (0, 0)

    def issubset(self, other: MonomialIdeal2) -> bool:
        return all(contains(other, g) for g in self.gens)

    def profile(self, upto: int) -> list[int]:
        """``p[j]`` = least ``i`` with ``x^i y^j`` in the ideal, for ``j <= upto``.

        Entries are ``None`` where no ``x^i y^j`` belongs to the ideal.
        """
        out = []
        g = self.gens
        # gens in increasing j order are reversed(g)
        k = len(g) - 1
        best = None
        for j in range(upto + 1):
            while k >= 0 and g[k].j <= j:
                best = g[k].i
                k -= 1
            out.append(best)
        return out


def normalize(raw: Iterable) -> MonomialIdeal2:
    """Minimal generators of the ideal generated by ``raw``, in staircase order."""
    ms = sorted(set(_check(raw)))
    if not ms:
        raise ValueError("empty generating set (the zero ideal is out of scope)")
    out = []
    for m in ms:
        # sorted by (i, j): m is redundant iff an earlier kept gen has j <= m.j
        if not out or m.j < out[-1].j:
            out.append(m)
    return MonomialIdeal2(tuple(out))


def from_profile(prof: Sequence[int]) -> MonomialIdeal2:
    """Inverse of :meth:`MonomialIdeal2.profile` for a profile ending in 0."""
    gens = []
    last = None
    for j, i in enumerate(prof):
        if i is None:
            continue
        if last is None or i < last:
            gens.append(Monomial2(i, j))
            last = i
    if last != 0:
        raise ValueError("profile must reach x-exponent 0")
    return MonomialIdeal2(tuple(reversed(gens)))


def unit_ideal() -> MonomialIdeal2:
    return MonomialIdeal2((Monomial2(0, 0),))


def contains(I: MonomialIdeal2, m: Monomial2) -> bool:
    g = I.gens
    # last generator with g.i <= m.i has the smallest j among the candidates
    k = bisect_right(g, (m[0], float("inf"))) - 1
    return k >= 0 and g[k].j <= m[1]


def multiply(I: MonomialIdeal2, K: MonomialIdeal2) -> MonomialIdeal2:
    return normalize((a.i + b.i, a.j + b.j) for a in I.gens for b in K.gens)


def power(I: MonomialIdeal2, n: int) -> MonomialIdeal2:
    if n < 0:
        raise ValueError("negative power")
    result = unit_ideal()
    base = I
    while n:
        if n & 1:
            result = multiply(result, base)
        n >>= 1
        if n:
            base = multiply(base, base)
    return result


def scale(I: MonomialIdeal2, m: Monomial2) -> MonomialIdeal2:
    """The ideal ``m * I``."""
    return MonomialIdeal2(tuple(Monomial2(g.i + m[0], g.j + m[1]) for g in I.gens))


def ideal_sum(I: MonomialIdeal2, K: MonomialIdeal2) -> MonomialIdeal2:
    return normalize(I.gens + K.gens)


def colon_monomial(I: MonomialIdeal2, m: Monomial2) -> MonomialIdeal2:
    a, b = m
    return normalize((max(g.i - a, 0), max(g.j - b, 0)) for g in I.gens)


def intersect(I: MonomialIdeal2, K: MonomialIdeal2) -> MonomialIdeal2:
    """``I ∩ K`` by merging the two staircases.

    The generators are lcms of generator pairs; walking the union of the
    x-breakpoints and taking the larger of the two step heights finds the
    minimal ones in linear time.
    """
    g1, g2 = I.gens, K.gens
    n1, n2 = len(g1), len(g2)
    p1 = p2 = -1
    out = []
    last = None
    for a in sorted({g.i for g in g1} | {g.i for g in g2}):
        while p1 + 1 < n1 and g1[p1 + 1].i <= a:
            p1 += 1
        while p2 + 1 < n2 and g2[p2 + 1].i <= a:
            p2 += 1
        if p1 < 0 or p2 < 0:
            continue
        v = max(g1[p1].j, g2[p2].j)
        if last is None or v < last:
            out.append(Monomial2(a, v))
            last = v
    return MonomialIdeal2(tuple(out))


def colon_ideal(I: MonomialIdeal2, K: MonomialIdeal2) -> MonomialIdeal2:
    """``I : K``, the intersection of ``I : m`` over the generators ``m`` of ``K``."""
    result = None
    for m in K.gens:
        q = colon_monomial(I, m)
        result = q if result is None else intersect(result, q)
    return result


def graded_piece(I: MonomialIdeal2, deg: int) -> frozenset[Monomial2]:
    """All monomials of total degree ``deg`` lying in ``I``."""
    return frozenset(
        Monomial2(deg - j, j) for j in range(deg + 1) if contains(I, Monomial2(deg - j, j))
    )
