"""The fiber ring as the semigroup ring ``k[S]``, ``S`` generated by the ``(d-a, a)``.

Degree ``n`` of ``S`` is ``nA`` and degree ``n`` of the partial saturation
``S*`` is ``E_n`` (see :func:`rrreg.ratliff_rush.initial_piece`).  The
graded pieces of ``H^1(k[S]) ≅ k[S*]/k[S]`` are spanned by ``E_n \\ nA``;
that isomorphism is quoted, not re-derived, so ``h1`` inherits it.

Buchsbaum test.  ``S* + (S \\ {0}) ⊆ S`` only needs one generator step:
if ``(E_n \\ nA) + A ⊆ (n+1)A`` for every ``n`` then adding ``m`` generators
lands in ``(n+m)A`` by induction on ``m``, since ``(n+1)A + A = (n+2)A``.
Gaps vanish for ``n >= s*_ini``, so ``1 <= n < s*_ini`` suffices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equigen import GeneratorSet, sumset_power
from .errors import InternalCheckError
from .ratliff_rush import initial_piece


@dataclass(frozen=True)
class SemigroupProfile:
    E: GeneratorSet
    s_ini: int
    h1: tuple[int, ...]
    is_cm: bool
    is_buchsbaum: bool

    def __post_init__(self):
        if self.is_cm and not self.is_buchsbaum or self.is_cm != (not any(self.h1)):
            raise InternalCheckError(f"inconsistent semigroup profile for {self.E}")


def _default_bound(E: GeneratorSet) -> int:
    from .regularity import reg_rees

    return reg_rees(E)


def gaps(E: GeneratorSet, n: int, bound: int) -> frozenset[int]:
    """``E_n \\ nA``, with closures taken under the regularity bound ``bound``."""
    return initial_piece(E, n, bound) - sumset_power(E, n)


def initial_regularity(E: GeneratorSet, bound: int) -> int:
    """``s*_ini``: one past the last degree with a gap (at least 1)."""
    m = max(bound, 1)
    while m > 1 and not gaps(E, m - 1, bound):
        m -= 1
    return m


def h1_dimensions(E: GeneratorSet, regR_or_cap: int | None = None) -> list[int]:
    """``dim H^1(k[S])_n`` for ``n = 1 .. s*_ini - 1``."""
    bound = _default_bound(E) if regR_or_cap is None else regR_or_cap
    s_ini = initial_regularity(E, bound)
    return [len(gaps(E, n, bound)) for n in range(1, s_ini)]


def classify(E: GeneratorSet, regR_or_cap: int | None = None) -> SemigroupProfile:
    bound = _default_bound(E) if regR_or_cap is None else regR_or_cap
    s_ini = initial_regularity(E, bound)
    h1 = []
    buchsbaum = True
    A = sorted(E.A)
    for n in range(1, s_ini):
        g = gaps(E, n, bound)
        h1.append(len(g))
        nxt = E.bits(n + 1)
        for c in g:
            if any(not nxt >> (c + a) & 1 for a in A):
                buchsbaum = False
                break
    return SemigroupProfile(E=E, s_ini=s_ini, h1=tuple(h1), is_cm=s_ini == 1, is_buchsbaum=buchsbaum)
