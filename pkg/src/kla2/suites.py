"""Named verification suites, as run by ``kla2 verify``.

Each suite takes :class:`SuiteOptions` and returns one merged
:class:`~kla2.report.VerifyReport`. Default ranges are the ones the test
suite uses; ``max_len`` caps the length of every element handed to the
brute-force oracle.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from kla2 import alcove as al
from kla2 import coxeter as cx
from kla2 import klformulas as kf
from kla2 import leaves as lv
from kla2 import projcoeff as pc
from kla2.report import VerifyReport, merge

__all__ = ["SuiteOptions", "SUITES", "run_suite", "run_all", "thread_count"]


@dataclass
class SuiteOptions:
    max_len: int = 15
    n: int | None = None
    m: int | None = None
    coeff_max: int = 10_000
    coeff_max_beyond: int = 1_000
    seed: int = 0


def _ns(opts: SuiteOptions, lo: int, hi: int, extra: int = 0) -> list[int]:
    """Indices ``lo..hi`` (or just ``opts.n``) whose oracle length ``n + extra`` fits."""
    ns = [opts.n] if opts.n is not None else range(lo, hi + 1)
    return [n for n in ns if n + extra <= opts.max_len]


def _mn(opts: SuiteOptions, limit: int, length: Callable[[int, int], int]) -> list[tuple[int, int]]:
    pairs = [(m, n) for m in range(limit + 1) for n in range(limit + 1) if m + n <= limit]
    if opts.m is not None:
        pairs = [p for p in pairs if p[0] == opts.m]
    if opts.n is not None:
        pairs = [p for p in pairs if p[1] == opts.n]
    return [p for p in pairs if length(*p) <= opts.max_len]


def thm1_wall(o: SuiteOptions) -> VerifyReport:
    return merge("thm1-wall", [kf.verify_thm1_wall(n) for n in _ns(o, 1, 14)], max_len=o.max_len)


def thm1_beyond(o: SuiteOptions) -> VerifyReport:
    reps = []
    for m, n in _mn(o, 6, lambda m, n: 2 * m + 2 * n + 3):
        for r, s in itertools.product((False, True), repeat=2):
            if 2 * m + 2 * n + 3 + r + s <= o.max_len:
                reps.append(kf.verify_thm1_beyond(m, n, r, s))
    for m, n in _mn(o, 5, lambda m, n: 2 * m + 2 * n + 3):
        reps.append(kf.verify_content_beyond(m, n))
        for i in range(1, min(m, n) + 1):
            reps.append(kf.verify_ngeq(cx.theta_elt(m, n), cx.theta_elt(m - i, n - i)))
    return merge("thm1-beyond", reps, max_len=o.max_len)


def prop_wall_b(o: SuiteOptions) -> VerifyReport:
    return merge("prop-wall-b", [kf.verify_prop_wall_B(n) for n in _ns(o, 5, 12, 1)], max_len=o.max_len)


def prop_out(o: SuiteOptions) -> VerifyReport:
    pairs = _mn(o, 5, lambda m, n: 2 * m + 2 * n + 5)
    return merge("prop-out", [kf.verify_prop_out(m, n) for m, n in pairs], max_len=o.max_len)


def notperverse(o: SuiteOptions) -> VerifyReport:
    reps = [kf.verify_lemma_notperverse(n) for n in _ns(o, 5, 10, 3)]
    return merge("notperverse", reps, max_len=o.max_len)


def counting(o: SuiteOptions) -> VerifyReport:
    return merge("counting", [kf.verify_counting(min(14, o.max_len))], max_len=o.max_len)


def classification(o: SuiteOptions) -> VerifyReport:
    rep = VerifyReport("classification", {"max_len": min(12, o.max_len)})
    elts = cx.elements_up_to(min(12, o.max_len))
    for x in elts:
        try:
            cx.classify(x)
        except LookupError as exc:
            rep.fail(element=cx.word_str(x), error=str(exc))
    rep.info["elements"] = len(elts)
    return rep


def monotonicity(o: SuiteOptions) -> VerifyReport:
    return merge("monotonicity", [kf.verify_monotonicity(min(10, o.max_len))], max_len=o.max_len)


def deodhar(o: SuiteOptions) -> VerifyReport:
    words = [w for L in range(7) for w in itertools.product((1, 2, 3), repeat=L)]
    rng = random.Random(o.seed)
    words += [tuple(rng.choice((1, 2, 3)) for _ in range(rng.randint(0, 10))) for _ in range(200)]
    return merge("deodhar", [lv.deodhar_check(w) for w in words], seed=o.seed)


def lemma_tree(o: SuiteOptions) -> VerifyReport:
    ns = [o.n] if o.n is not None else range(4, 17)
    return merge("lemma-tree", [lv.tree_classify(n) for n in ns])


def hom_dims(o: SuiteOptions) -> VerifyReport:
    reps = [lv.verify_bounds_beyond(m, n) for m, n in _mn(o, 6, lambda m, n: 2 * m + 2 * n + 3)]
    for m, n in _mn(o, 6, lambda m, n: 2 * m + 2 * n + 3):
        if n < 1:
            continue
        if n <= m:
            reps.append(lv.verify_threelittleleaves(m, n))
        reps.extend(lv.verify_fourlittleleaves(m, n, i) for i in range(1, min(n - 1, m) + 1))
    reps.extend(lv.verify_deg0_wall(n) for n in _ns(o, 5, 10, 1))
    return merge("hom-dims", reps, max_len=o.max_len)


def hexagon(o: SuiteOptions) -> VerifyReport:
    reps = [kf.verify_hexagon_step(m, n) for m, n in _mn(o, 4, lambda m, n: 2 * m + 2 * n + 7)]
    reps += [al.hexagon_decomposition(m, n) for m, n in _mn(o, 3, lambda m, n: 2 * m + 2 * n + 7)]
    reps += [al.region_is_equilateral_triangle(m) for m in range(5) if 2 * m + 3 <= o.max_len]
    return merge("hexagon", reps, max_len=o.max_len)


def support_shape(o: SuiteOptions) -> VerifyReport:
    return merge("support-shape", [kf.verify_support_shape_wall(n) for n in _ns(o, 1, 12)], max_len=o.max_len)


def coeff_recursions(o: SuiteOptions) -> VerifyReport:
    reps = [pc.wall_rec_check(o.coeff_max),
            pc.beyond_rec_check_fast(o.coeff_max_beyond, o.coeff_max_beyond)]
    return merge("coeff-recursions", reps, max=o.coeff_max, max_beyond=o.coeff_max_beyond)


def mu_support(o: SuiteOptions) -> VerifyReport:
    return merge("mu-support", [kf.verify_mu_support_wall(n) for n in _ns(o, 1, 12)], max_len=o.max_len)


SUITES: dict[str, Callable[[SuiteOptions], VerifyReport]] = {
    "classification": classification,
    "coeff-recursions": coeff_recursions,
    "counting": counting,
    "deodhar": deodhar,
    "hexagon": hexagon,
    "hom-dims": hom_dims,
    "lemma-tree": lemma_tree,
    "monotonicity": monotonicity,
    "mu-support": mu_support,
    "notperverse": notperverse,
    "prop-out": prop_out,
    "prop-wall-b": prop_wall_b,
    "support-shape": support_shape,
    "thm1-beyond": thm1_beyond,
    "thm1-wall": thm1_wall,
}


def thread_count() -> int:
    """``KLA2_THREADS``: 0 or unset means one per CPU, 1 means serial."""
    raw = os.environ.get("KLA2_THREADS", "0")
    try:
        k = int(raw)
    except ValueError:
        raise ValueError(f"KLA2_THREADS must be an integer, got {raw!r}") from None
    if k < 0:
        raise ValueError(f"KLA2_THREADS must be >= 0, got {k}")
    return k or (os.cpu_count() or 1)


def run_suite(name: str, opts: SuiteOptions | None = None) -> VerifyReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    return SUITES[name](opts or SuiteOptions())


def run_all(opts: SuiteOptions | None = None) -> list[VerifyReport]:
    """Every suite; results come back in suite-name order whatever the thread count."""
    opts = opts or SuiteOptions()
    names = sorted(SUITES)
    workers = thread_count()
    if workers == 1:
        return [run_suite(n, opts) for n in names]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda n: run_suite(n, opts), names))
