"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--word-len 16] [--rec 1000] [--repeat 3]
"""

import argparse
import time

import numpy as np

from kla2 import _kernels as kk


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--word-len", type=int, default=16)
    p.add_argument("--rec", type=int, default=1000)
    p.add_argument("--repeat", type=int, default=3)
    a = p.parse_args()

    word = np.asarray([(i % 3) + 1 for i in range(a.word_len)], dtype=np.int64)
    cases = [
        (f"leaves L={a.word_len}", lambda: kk.leaves_numba(word), lambda: kk.leaves_numpy(word)),
        (f"beyond recursions {a.rec}x{a.rec}",
         lambda: kk.beyond_rec_numba(a.rec, a.rec), lambda: kk.beyond_rec_numpy(a.rec, a.rec)),
    ]
    print(f"{'kernel':<32}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, fast, slow in cases:
        if kk.HAVE_NUMBA:
            fast()  # compile
            tf = best(fast, a.repeat)
        else:
            tf = float("nan")
        ts = best(slow, a.repeat)
        print(f"{name:<32}{tf:>10.4f}{ts:>10.4f}{ts / tf:>9.1f}")


if __name__ == "__main__":
    main()
