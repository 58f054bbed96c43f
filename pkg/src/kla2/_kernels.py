"""Hot loops: leaf enumeration and the beyond-wall coefficient recursions.

Each kernel has a numba version and a pure numpy version. Numba is used
when it imports and ``KLA2_NUMBA`` is not ``0``.

Decoration codes: ``U0=0, U1=1, D0=2, D1=3``. Bit ``i`` of leaf ``k`` is
``(k >> (L-1-i)) & 1``, so leaves come out in lexicographic bit order.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("KLA2_NUMBA", "1") != "0"

__all__ = ["USE_NUMBA", "leaves_numba", "leaves_numpy", "enumerate_leaves_arrays",
           "beyond_rec_numba", "beyond_rec_numpy", "beyond_rec_arrays"]


def _jit(fn):
    return njit(cache=False)(fn) if HAVE_NUMBA else fn


# ---- leaves -----------------------------------------------------------------


@_jit
def leaves_numba(word):
    L = word.shape[0]
    N = 1 << L
    ends = np.empty((N, 3), dtype=np.int64)
    defects = np.empty(N, dtype=np.int64)
    codes = np.empty((N, L), dtype=np.int8)
    for k in range(N):
        a, b, c = 1, 2, 3
        d = 0
        for i in range(L):
            s = word[i]
            bit = (k >> (L - 1 - i)) & 1
            if s == 1:
                up = a < b
            elif s == 2:
                up = b < c
            else:
                up = c < a + 3
            codes[k, i] = (0 if up else 2) + bit
            if bit == 0:
                d += 1 if up else -1
            elif s == 1:
                a, b = b, a
            elif s == 2:
                b, c = c, b
            else:
                a, c = c - 3, a + 3
        ends[k, 0] = a
        ends[k, 1] = b
        ends[k, 2] = c
        defects[k] = d
    return ends, defects, codes


def leaves_numpy(word):
    word = np.asarray(word, dtype=np.int64)
    L = word.shape[0]
    k = np.arange(1 << L, dtype=np.int64)
    a = np.ones_like(k)
    b = np.full_like(k, 2)
    c = np.full_like(k, 3)
    d = np.zeros_like(k)
    codes = np.empty((k.shape[0], L), dtype=np.int8)
    for i in range(L):
        s = word[i]
        bit = (k >> (L - 1 - i)) & 1
        if s == 1:
            up = a < b
        elif s == 2:
            up = b < c
        else:
            up = c < a + 3
        codes[:, i] = np.where(up, 0, 2) + bit
        d += np.where(bit == 0, np.where(up, 1, -1), 0)
        m = bit == 1
        if s == 1:
            a, b = np.where(m, b, a), np.where(m, a, b)
        elif s == 2:
            b, c = np.where(m, c, b), np.where(m, b, c)
        else:
            a, c = np.where(m, c - 3, a), np.where(m, a + 3, c)
    return np.stack([a, b, c], axis=1), d, codes


def enumerate_leaves_arrays(word):
    """``(endpoints (N,3), defects (N,), codes (N,L))`` for all ``2^L`` bit strings."""
    w = np.asarray(word, dtype=np.int64)
    if USE_NUMBA:
        return leaves_numba(w)
    return leaves_numpy(w)


# ---- beyond-wall recursions ---------------------------------------------------
# Exact int64 fractions, reduced after every step. Values stay below ~1e13
# for indices up to 1e3.


@_jit
def _gcd(x, y):
    x = abs(x)
    y = abs(y)
    while y:
        x, y = y, x % y
    return x


@_jit
def _red(p, q):
    if q < 0:
        p, q = -p, -q
    g = _gcd(p, q)
    if g > 1:
        p //= g
        q //= g
    return p, q


@_jit
def beyond_rec_numba(M, N):
    """Run the recursions for ``1 <= m <= M``, ``1 <= n <= N``.

    Returns ``[checked, mismatches, first_m, first_n]``. The first mismatch
    is ``(-1, -1)`` when there is none.
    """
    out = np.zeros(4, dtype=np.int64)
    out[2] = -1
    out[3] = -1
    # -1/c_{m+1} = -2 + c_m, c_1 = 0
    cp, cq = 0, 1
    for m in range(1, M + 1):
        rp, rq = _red(-2 * cq + cp, cq)
        cp, cq = _red(-rq, rp)
        out[0] += 1
        if cp * (m + 1) != m * cq:
            out[1] += 1
            if out[2] < 0:
                out[2] = m + 1
                out[3] = 0
    for n in range(1, N + 1):
        # c_n = (n-1)/n
        # -1/d_{1,n} = 3 - 2 c_n
        rp, rq = _red(3 * n - 2 * (n - 1), n)
        dp, dq = _red(-rq, rp)
        for m in range(1, M + 1):
            out[0] += 1
            # closed: d_{m,n} = -n(n+m) / ((n+1)(n+m+1))
            if dp * (n + 1) * (n + m + 1) != -n * (n + m) * dq:
                out[1] += 1
                if out[2] < 0:
                    out[2] = m
                    out[3] = n
            # -1/d_{m+1,n} = 4 - 2c_n + d_{m,n} (2 - c_n)^2, (2 - c_n) = (n+1)/n
            tp, tq = _red(dp * (n + 1) * (n + 1), dq * n * n)
            rp, rq = _red(tp * n + (2 * n + 2) * tq, tq * n)
            dp, dq = _red(-rq, rp)
    return out


def beyond_rec_numpy(M, N):
    """Same contract as :func:`beyond_rec_numba`, vectorized over ``n``."""
    out = np.zeros(4, dtype=np.int64)
    out[2:] = -1
    # c recursion along m: c_{m+1} = -1/(-2 + c_m), run scalar (M steps)
    cp, cq = 0, 1
    for mm in range(1, M + 1):
        rp, rq = -2 * cq + cp, cq
        g = np.gcd(rp, rq)
        cp, cq = -rq // g, rp // g
        if cq < 0:
            cp, cq = -cp, -cq
        out[0] += 1
        if cp * (mm + 1) != mm * cq:
            out[1] += 1
            if out[2] < 0:
                out[2:] = (mm + 1, 0)
    if N < 1 or M < 1:
        return out
    n = np.arange(1, N + 1, dtype=np.int64)

    def red(p, q):
        g = np.gcd(p, q)
        p, q = p // g, q // g
        sgn = np.where(q < 0, -1, 1)
        return p * sgn, q * sgn

    # -1/d_{1,n} = 3 - 2 c_n
    rp, rq = red(3 * n - 2 * (n - 1), n)
    dp, dq = red(-rq, rp)
    for mm in range(1, M + 1):
        out[0] += N
        bad = dp * (n + 1) * (n + mm + 1) != -n * (n + mm) * dq
        nb = int(bad.sum())
        if nb:
            out[1] += nb
            if out[2] < 0:
                out[2:] = (mm, int(n[np.argmax(bad)]))
        tp, tq = red(dp * (n + 1) * (n + 1), dq * n * n)
        rp, rq = red(tp * n + (2 * n + 2) * tq, tq * n)
        dp, dq = red(-rq, rp)
    return out


def beyond_rec_arrays(M: int, N: int):
    if USE_NUMBA:
        return beyond_rec_numba(M, N)
    return beyond_rec_numpy(M, N)
