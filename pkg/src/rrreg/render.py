"""Staircase diagrams of ``I^n`` and its Ratliff-Rush closure.

The picture is the exponent plane: ``i`` (power of x) to the right, ``j``
(power of y) upwards, clipped to ``[0, nd+d]`` in both directions.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .equigen import GeneratorSet, power_ideal
from .ratliff_rush import rr_closure
from .regularity import reg_rees

GEN, EXTRA, MEMBER, EMPTY = "@", "o", "+", "."
LEGEND = f"{GEN} generator of I^n   {EXTRA} in the closure but not in I^n   {MEMBER} in I^n   {EMPTY} outside"


def _layers(E: GeneratorSet, n: int, regR: int | None):
    if regR is None:
        regR = reg_rees(E)
    size = n * E.d + E.d
    I = power_ideal(E, n)
    C = rr_closure(E, n, regR).closure if n >= 1 else I
    pI, pC = I.profile(size), C.profile(size)
    gens = {(g.i, g.j) for g in I.gens}
    return size, I, C, pI, pC, gens


def _cell(i, j, pI, pC, gens) -> str:
    if (i, j) in gens:
        return GEN
    if pI[j] is not None and i >= pI[j]:
        return MEMBER
    if pC[j] is not None and i >= pC[j]:
        return EXTRA
    return EMPTY


def extra_points(E: GeneratorSet, n: int, regR: int | None = None) -> list[tuple[int, int]]:
    """Exponents of the monomials in the closure of ``I^n`` but not in ``I^n``."""
    size, _, _, pI, pC, gens = _layers(E, n, regR)
    return [(i, j) for j in range(size + 1) for i in range(size + 1) if _cell(i, j, pI, pC, gens) == EXTRA]


def render_ascii(E: GeneratorSet, n: int, regR: int | None = None) -> str:
    size, I, C, pI, pC, gens = _layers(E, n, regR)
    w = len(str(size))
    lines = [f"I^{n} for {E}", LEGEND]
    for j in range(size, -1, -1):
        row = " ".join(_cell(i, j, pI, pC, gens) for i in range(size + 1))
        lines.append(f"{j:>{w}} {row}")
    lines.append(" " * (w + 1) + " ".join(str(i % 10) for i in range(size + 1)))
    return "\n".join(lines) + "\n"


def render_svg(E: GeneratorSet, n: int, regR: int | None = None, cell: int = 14) -> str:
    size, I, C, pI, pC, gens = _layers(E, n, regR)
    m = 40
    W = H = 2 * m + size * cell
    def X(i):
        return m + i * cell
    def Y(j):
        return H - m - j * cell
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H + 30}" viewBox="0 0 {W} {H + 30}">',
        f"<title>{escape(f'I^{n} and its Ratliff-Rush closure for {E}')}</title>",
        f'<rect width="{W}" height="{H + 30}" fill="white"/>',
        f'<line x1="{X(0)}" y1="{Y(0)}" x2="{X(size)}" y2="{Y(0)}" stroke="black"/>',
        f'<line x1="{X(0)}" y1="{Y(0)}" x2="{X(0)}" y2="{Y(size)}" stroke="black"/>',
        f'<text x="{X(size)}" y="{Y(0) + 24}" font-size="12" text-anchor="end">i (power of x)</text>',
        f'<text x="{X(0) - 6}" y="{Y(size) - 8}" font-size="12">j (power of y)</text>',
    ]
    for ideal, style in ((C, 'stroke="#c0392b" stroke-dasharray="4,3"'), (I, 'stroke="black"')):
        out.append(f'<polyline fill="none" stroke-width="1.5" {style} points="{_stair_points(ideal, size, X, Y)}"/>')
    for j in range(size + 1):
        for i in range(size + 1):
            c = _cell(i, j, pI, pC, gens)
            if c == GEN:
                out.append(f'<circle cx="{X(i)}" cy="{Y(j)}" r="4" fill="black"/>')
            elif c == EXTRA:
                out.append(f'<circle cx="{X(i)}" cy="{Y(j)}" r="4" fill="white" stroke="#c0392b" stroke-width="1.5"/>')
            elif c == MEMBER:
                out.append(f'<circle cx="{X(i)}" cy="{Y(j)}" r="1.5" fill="#555"/>')
            else:
                out.append(f'<circle cx="{X(i)}" cy="{Y(j)}" r="1" fill="#ccc"/>')
    out.append(
        f'<text x="{m}" y="{H + 18}" font-size="12">filled: generators of I^{n}; '
        "hollow red: closure minus I^n; dashed: closure staircase</text>"
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _stair_points(ideal, size, X, Y) -> str:
    """Outline of the staircase: down at each generator, then right to the next."""
    g = [(min(m.i, size), min(m.j, size)) for m in ideal.gens]
    pts = [(g[0][0], size)]
    for k, (i, j) in enumerate(g):
        pts.append((i, j))
        nxt = g[k + 1][0] if k + 1 < len(g) else size
        pts.append((nxt, j))
    return " ".join(f"{X(i)},{Y(j)}" for i, j in pts)


def render_staircase(E: GeneratorSet, n: int, mode: str = "ascii", regR: int | None = None) -> str:
    if mode == "ascii":
        return render_ascii(E, n, regR)
    if mode == "svg":
        return render_svg(E, n, regR)
    raise ValueError(f"unknown mode {mode!r}")
