"""Projector coefficients on the wall and beyond it, as exact rationals.

Closed forms are the claim; the recursions are the oracle.

>>> wall_c(5), wall_d(7), beyond_c(2), beyond_d(2, 1)
(Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(-3, 8))
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from kla2 import _kernels
from kla2.report import VerifyReport

__all__ = [
    "wall_c", "wall_c_rec", "wall_d", "wall_d_rec", "beyond_c", "beyond_d",
    "beyond_rec_check", "wall_rec_check", "beyond_rec_check_fast", "coeff_table",
]


def wall_c(n: int) -> Fraction:
    """``c_1 = c_2 = 0`` and ``c_{2k+1} = c_{2k+2} = -(k-1)/k``."""
    if n < 1:
        raise ValueError(f"c_n needs n >= 1, got {n}")
    if n <= 2:
        return Fraction(0)
    k = (n - 1) // 2
    return Fraction(-(k - 1), k)


@lru_cache(maxsize=None)
def _wall_c_seq(n: int) -> tuple[Fraction, ...]:
    seq = [Fraction(0)] * 4
    for k in range(4, n):
        denom = -2 - seq[k - 2]  # 1/c_{k+1} = -2 - c_{k-1}
        if denom == 0:
            raise ZeroDivisionError(f"c recursion undefined at index {k + 1}")
        seq.append(1 / denom)
    return tuple(seq[:n])


def wall_c_rec(n: int) -> Fraction:
    """``c_n`` from ``1/c_{n+1} = -2 - c_{n-1}`` with ``c_1 = ... = c_4 = 0``."""
    if n < 1:
        raise ValueError(f"c_n needs n >= 1, got {n}")
    return _wall_c_seq(max(n, 4))[n - 1]


def _check_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"d_n is defined for odd n >= 1, got {n}")


def wall_d(n: int) -> Fraction:
    """``d_1 = d_3 = d_5 = 0`` and ``d_{2k+1} = (k-2)/(k-1)``."""
    _check_odd(n)
    k = (n - 1) // 2
    if k <= 2:
        return Fraction(0)
    return Fraction(k - 2, k - 1)


@lru_cache(maxsize=None)
def _wall_d_seq(k: int) -> tuple[Fraction, ...]:
    # entry j holds d_{2j+1}
    seq = [Fraction(0)] * 3
    for j in range(3, k + 1):
        denom = 2 - seq[j - 1]  # 1/d_{2j+1} = 2 - d_{2j-1}
        if denom == 0:
            raise ZeroDivisionError(f"d recursion undefined at index {2 * j + 1}")
        seq.append(1 / denom)
    return tuple(seq[: k + 1])


def wall_d_rec(n: int) -> Fraction:
    """``d_n`` (odd ``n``) from ``1/d_{2k+1} = 2 - d_{2k-1}``, ``d_1 = d_3 = d_5 = 0``."""
    _check_odd(n)
    k = (n - 1) // 2
    return _wall_d_seq(max(k, 2))[k]


def beyond_c(m: int) -> Fraction:
    """``c_m = (m-1)/m`` for ``m >= 1``."""
    if m < 1:
        raise ValueError(f"beyond c_m needs m >= 1, got {m}")
    return Fraction(m - 1, m)


def beyond_d(m: int, n: int) -> Fraction:
    """``d_{m,n} = -n(n+m) / ((n+1)(n+m+1))`` for ``m >= 1``, ``n >= 0``."""
    if m < 1 or n < 0:
        raise ValueError(f"beyond d_(m,n) needs m >= 1, n >= 0, got ({m}, {n})")
    return Fraction(-n * (n + m), (n + 1) * (n + m + 1))


def wall_rec_check(N: int) -> VerifyReport:
    """Closed forms against the recursions for ``1 <= n <= N`` (``d`` on odd ``n``)."""
    rep = VerifyReport("coeff-recursions-wall", {"max": N})
    rec_c = _wall_c_seq(max(N, 4))
    rec_d = _wall_d_seq(max((N - 1) // 2, 2))
    for n in range(1, N + 1):
        if wall_c(n) != rec_c[n - 1]:
            rep.fail(coeff="c", index=n, closed=str(wall_c(n)), recursive=str(rec_c[n - 1]))
        if n % 2 and wall_d(n) != rec_d[(n - 1) // 2]:
            rep.fail(coeff="d", index=n, closed=str(wall_d(n)), recursive=str(rec_d[(n - 1) // 2]))
    rep.info["checked"] = N + (N + 1) // 2
    return rep


def beyond_rec_check(M: int, N: int) -> VerifyReport:
    """Closed forms satisfy all three beyond recursions for ``m <= M``, ``n <= N``.

    The recursions involve ``c_n`` with ``n >= 1`` only; at ``n = 0`` they
    are not defined and the closed form ``d_{m,0} = 0`` is checked on its own.
    """
    rep = VerifyReport("coeff-recursions-beyond", {"M": M, "N": N})
    checked = 0
    for m in range(1, M + 1):
        lhs = -1 / beyond_c(m + 1)
        rhs = -2 + beyond_c(m)
        checked += 1
        if lhs != rhs:
            rep.fail(recursion="c", m=m, lhs=str(lhs), rhs=str(rhs))
    for n in range(1, N + 1):
        c = beyond_c(n)
        checked += 1
        if -1 / beyond_d(1, n) != 3 - 2 * c:
            rep.fail(recursion="d1", n=n)
        for m in range(1, M):
            checked += 1
            if -1 / beyond_d(m + 1, n) != 4 - 2 * c + beyond_d(m, n) * (2 - c) ** 2:
                rep.fail(recursion="d", m=m, n=n)
    for m in range(1, M + 1):
        checked += 1
        if beyond_d(m, 0) != 0:
            rep.fail(recursion="d(m,0)", m=m)
    rep.info["checked"] = checked
    return rep


def beyond_rec_check_fast(M: int, N: int) -> VerifyReport:
    """:func:`beyond_rec_check` on the int64 kernel, for large ``M``, ``N``.

    The kernel runs each recursion from its base value and compares every
    step with the closed form.
    """
    rep = VerifyReport("coeff-recursions-beyond", {"M": M, "N": N})
    checked, bad, m0, n0 = (int(t) for t in _kernels.beyond_rec_arrays(M, N))
    if bad:
        rep.fail(mismatches=bad, first=[m0, n0])
    rep.info["checked"] = checked
    rep.info["backend"] = "numba" if _kernels.USE_NUMBA else "numpy"
    return rep


def coeff_table(kind: str, N: int) -> list[dict]:
    """Rows ``{index, closed, recursive, equal}`` for the CLI."""
    rows = []
    if kind == "wall":
        for n in range(1, N + 1):
            pairs = [("c", wall_c(n), wall_c_rec(n))]
            if n % 2:
                pairs.append(("d", wall_d(n), wall_d_rec(n)))
            for name, a, b in pairs:
                rows.append({"coeff": name, "index": n, "closed": str(a), "recursive": str(b), "equal": a == b})
    elif kind == "beyond":
        prev = Fraction(0)
        for m in range(1, N + 1):
            rec = prev
            rows.append({"coeff": "c", "index": m, "closed": str(beyond_c(m)), "recursive": str(rec),
                         "equal": rec == beyond_c(m)})
            prev = -1 / (-2 + rec)
        for n in range(1, N + 1):
            c = beyond_c(n)
            d = -1 / (3 - 2 * c)
            for m in range(1, N + 1):
                rows.append({"coeff": "d", "index": [m, n], "closed": str(beyond_d(m, n)),
                             "recursive": str(d), "equal": d == beyond_d(m, n)})
                d = -1 / (4 - 2 * c + d * (2 - c) ** 2)
    else:
        raise ValueError(f"unknown coefficient kind {kind!r}")
    return rows
