# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``."""

from libc.stdlib cimport malloc, free


def colon_witness(const long long[:] pred_n, const long long[:] pred_n1, long long n, long long d):
    cdef long long nd = n * d
    cdef long long top = nd + d
    cdef long long dmax = -1, deg, D, Dp, k0, L, l, m, c, k, j, kmax
    cdef char run
    cdef char *bad
    cdef char *prefix
    cdef char *suffix
    if nd == 0:
        return None
    for j in range(nd):
        deg = nd - pred_n[j] - 1 + j
        if deg > dmax:
            dmax = deg
    if dmax < nd:
        return None
    # chains never exceed (dmax // d) + 2 constraints
    L = dmax // d + 3
    bad = <char *> malloc(L)
    prefix = <char *> malloc(L)
    suffix = <char *> malloc(L + 1)
    try:
        for D in range(nd, dmax + 1):
            Dp = D + d
            kmax = d if d < D + 1 else D + 1
            for k0 in range(kmax):
                L = (D - k0) // d + 1
                for l in range(L + 1):
                    m = k0 + l * d
                    c = pred_n1[m] if m <= top else top
                    bad[l] = (Dp - m) < (top - c)
                run = 1
                for l in range(L + 1):
                    run = run and bad[l]
                    prefix[l] = run
                run = 1
                suffix[L + 1] = 1
                for l in range(L, -1, -1):
                    run = run and bad[l]
                    suffix[l] = run
                for l in range(L):
                    k = k0 + l * d
                    c = pred_n[k] if k <= nd else nd
                    if D - k >= nd - c:
                        continue
                    if not prefix[l] and not suffix[l + 1]:
                        return (D, k)
    finally:
        free(bad)
        free(prefix)
        free(suffix)
    return None


def rank_mod_p(const long long[:] flat, long long nrows, long long ncols, long long p):
    cdef long long *a
    cdef long long rank = 0, col, r, piv, c, f, inv, t, x
    cdef long long i
    if p <= 1 or p >= (1LL << 31):
        raise ValueError("modulus must satisfy 1 < p < 2**31")
    a = <long long *> malloc(max(nrows * ncols, 1) * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(nrows * ncols):
            x = flat[i] % p
            a[i] = x + p if x < 0 else x
        for col in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                if a[r * ncols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for c in range(ncols):
                    t = a[piv * ncols + c]
                    a[piv * ncols + c] = a[rank * ncols + c]
                    a[rank * ncols + c] = t
            inv = _inv_mod(a[rank * ncols + col], p)
            for c in range(col, ncols):
                a[rank * ncols + c] = a[rank * ncols + c] * inv % p
            for r in range(rank + 1, nrows):
                f = a[r * ncols + col]
                if f != 0:
                    for c in range(col, ncols):
                        a[r * ncols + c] = (a[r * ncols + c] - f * a[rank * ncols + c]) % p
                        if a[r * ncols + c] < 0:
                            a[r * ncols + c] += p
            rank += 1
            if rank == nrows:
                break
    finally:
        free(a)
    return rank


cdef long long _inv_mod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t
