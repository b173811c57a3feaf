"""Equal-degree m-primary monomial ideals as exponent sets.

An ideal generated by monomials of degree ``d`` and containing ``x^d, y^d``
is stored as ``A ⊆ {0..d}``, where ``a`` stands for ``x^(d-a) y^a`` (``a`` is
always the exponent of ``y``).  Its ``n``-th power is generated in degree
``nd`` by the monomials indexed by the sumset ``nA``, so most questions about
powers become questions about sumsets.

Sumsets are Python ints used as bitsets (bit ``c`` set iff ``c`` is in the
set).  Each ``GeneratorSet`` memoizes its sumsets by ``n``.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InternalCheckError, NotMPrimaryError
from .staircase import Monomial2, MonomialIdeal2


@dataclass(frozen=True)
class GeneratorSet:
    d: int
    A: frozenset[int]
    _sums: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __init__(self, d: int, A: Iterable[int]):
        A = frozenset(int(a) for a in A)
        if d < 1:
            raise NotMPrimaryError("generator degree must be positive")
        if not A <= set(range(d + 1)):
            raise NotMPrimaryError(f"exponents must lie in 0..{d}: {sorted(A)}")
        if 0 not in A or d not in A:
            raise NotMPrimaryError("x^d and y^d must be generators (0 and d in A)")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "_sums", {0: 1})

    @property
    def exponents(self) -> list[int]:
        return sorted(self.A)

    @property
    def is_parameter(self) -> bool:
        return len(self.A) == 2

    def reflect(self) -> GeneratorSet:
        """Swap the roles of x and y: ``a -> d - a``."""
        return GeneratorSet(self.d, (self.d - a for a in self.A))

    def bits(self, n: int) -> int:
        """Bitset of the sumset ``nA``."""
        if n < 0:
            raise ValueError("negative power")
        cache = self._sums
        if n in cache:
            return cache[n]
        k = max(m for m in cache if m < n)
        cur = cache[k]
        shifts = sorted(self.A)
        while k < n:
            nxt = 0
            for a in shifts:
                nxt |= cur << a
            cur = nxt
            k += 1
            cache[k] = cur
        return cur

    def __str__(self) -> str:
        return f"d={self.d}; a=" + ",".join(str(a) for a in self.exponents)


def bits_to_set(bits: int) -> frozenset[int]:
    out = []
    c = 0
    while bits:
        if bits & 1:
            out.append(c)
        bits >>= 1
        c += 1
    return frozenset(out)


def sumset_power(E: GeneratorSet, n: int) -> frozenset[int]:
    """The n-fold sumset ``nA``; ``0A = {0}``."""
    return bits_to_set(E.bits(n))


def pred_table(bits: int, width: int) -> array:
    """``t[j]`` = largest set element ``<= j`` for ``0 <= j <= width``.

    The set must contain 0, which every sumset of a ``GeneratorSet`` does.
    """
    t = array("q", bytes(8 * (width + 1)))
    s = format(bits & ((1 << (width + 1)) - 1), "b")[::-1]
    last = 0
    for j in range(width + 1):
        if j < len(s) and s[j] == "1":
            last = j
        t[j] = last
    return t


def succ_table(bits: int, width: int) -> array:
    """``t[v]`` = smallest set element ``>= v`` for ``0 <= v <= width``.

    ``width`` itself must be an element.
    """
    t = array("q", bytes(8 * (width + 1)))
    s = format(bits & ((1 << (width + 1)) - 1), "b")[::-1]
    if len(s) <= width or s[width] != "1":
        raise ValueError("succ_table needs width in the set")
    nxt = width
    for v in range(width, -1, -1):
        if s[v] == "1":
            nxt = v
        t[v] = nxt
    return t


def ideal_of(E: GeneratorSet) -> MonomialIdeal2:
    d = E.d
    return MonomialIdeal2(tuple(Monomial2(d - a, a) for a in sorted(E.A, reverse=True)))


def power_ideal(E: GeneratorSet, n: int) -> MonomialIdeal2:
    """``I^n`` read off the sumset ``nA``."""
    nd = n * E.d
    cs = sorted(sumset_power(E, n), reverse=True)
    return MonomialIdeal2(tuple(Monomial2(nd - c, c) for c in cs))


def member(E: GeneratorSet, n: int, m: Monomial2) -> bool:
    """Is ``x^i y^j`` in ``I^n``?

    Divisibility by ``x^(nd-c) y^c`` means ``c <= j`` and ``c >= nd - i``, so
    membership is a nonempty intersection of ``nA`` with ``[nd - i, j]``.
    """
    i, j = m
    nd = n * E.d
    lo, hi = max(nd - i, 0), min(j, nd)
    if lo > hi:
        return False
    window = E.bits(n) >> lo
    return bool(window & ((1 << (hi - lo + 1)) - 1))


def reduction_number(E: GeneratorSet, cap: int | None = None) -> int:
    """Least ``n`` with ``(n+1)A = nA ∪ (nA + d)``: the reduction number for ``(x^d, y^d)``."""
    if cap is None:
        from .regularity import safe_cap

        cap = safe_cap(E.d)
    d = E.d
    for n in range(cap + 1):
        cur = E.bits(n)
        if E.bits(n + 1) == cur | (cur << d):
            return n
    raise InternalCheckError(f"reduction number of {E} exceeds the cap {cap}")


def iter_generator_sets(d: int):
    """All valid ``A`` for degree ``d`` in a canonical order (by interior bitmask)."""
    inner = list(range(1, d))
    for mask in range(1 << len(inner)):
        yield GeneratorSet(d, [0, d] + [a for k, a in enumerate(inner) if mask >> k & 1])
