"""Pure-Python reference implementations of the hot kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Inputs are flat integer buffers (``array.array('q')`` or lists).
"""

from __future__ import annotations


def colon_witness(pred_n, pred_n1, n: int, d: int):
    """Search for an element of ``(I^{n+1} : (x^d + y^d))`` outside ``I^n``.

    ``pred_n[j]`` is the largest element of the sumset ``nA`` that is ``<= j``
    for ``0 <= j <= n*d``; ``pred_n1`` is the same table for ``(n+1)A``.

    Multiplication by ``x^d + y^d`` only couples the coefficients of
    ``x^{D-k} y^k`` along a residue class ``k mod d``, and each coupling is
    ``h_m + h_{m-d} = 0``.  A coefficient is forced to vanish exactly when a
    run of such constraints connects it to an end of its chain.  Returns the
    ``(D, k)`` of an unforced coefficient whose monomial is not in ``I^n``,
    or ``None`` when the colon equals ``I^n``.
    """
    nd = n * d
    top = nd + d
    if nd == 0:
        return None
    dmax = -1
    for j in range(nd):
        deg = nd - pred_n[j] - 1 + j
        if deg > dmax:
            dmax = deg
    for D in range(nd, dmax + 1):
        Dp = D + d
        for k0 in range(min(d, D + 1)):
            L = (D - k0) // d + 1
            # constraint l sits at y-exponent k0 + l*d of the product (degree D+d)
            bad = []
            for l in range(L + 1):
                m = k0 + l * d
                c = pred_n1[m] if m <= top else top
                bad.append(Dp - m < top - c)
            prefix = [False] * (L + 1)
            run = True
            for l in range(L + 1):
                run = run and bad[l]
                prefix[l] = run
            suffix = [False] * (L + 2)
            run = True
            suffix[L + 1] = True
            for l in range(L, -1, -1):
                run = run and bad[l]
                suffix[l] = run
            for l in range(L):
                k = k0 + l * d
                c = pred_n[k] if k <= nd else nd
                if D - k >= nd - c:
                    continue  # monomial already in I^n
                if not prefix[l] and not suffix[l + 1]:
                    return (D, k)
    return None


def rank_mod_p(flat, nrows: int, ncols: int, p: int) -> int:
    """Rank of a row-major integer matrix over GF(p)."""
    if p <= 1 or p >= 1 << 31:
        raise ValueError("modulus must satisfy 1 < p < 2**31")
    rows = [[x % p for x in flat[r * ncols:(r + 1) * ncols]] for r in range(nrows)]
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], -1, p)
        for c in range(col, ncols):
            prow[c] = prow[c] * inv % p
        for r in range(rank + 1, nrows):
            f = rows[r][col]
            if f:
                row = rows[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - f * prow[c]) % p
        rank += 1
        if rank == nrows:
            break
    return rank
