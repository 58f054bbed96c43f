import itertools
import os
import subprocess
import sys

import numpy as np
import pytest

from kla2 import _kernels as kk

needs_numba = pytest.mark.skipif(not kk.HAVE_NUMBA, reason="numba not installed")


@needs_numba
@pytest.mark.parametrize("word", [(), (1,), (1, 2, 1), (1, 2, 3, 1, 2, 3, 1), (3, 3, 2, 1, 1, 2, 3, 2, 1, 3)])
def test_leaf_kernels_agree(word):
    w = np.asarray(word, dtype=np.int64)
    for a, b in zip(kk.leaves_numba(w), kk.leaves_numpy(w)):
        np.testing.assert_array_equal(a, b)


@needs_numba
def test_leaf_kernels_agree_on_all_short_words():
    for L in range(5):
        for word in itertools.product((1, 2, 3), repeat=L):
            w = np.asarray(word, dtype=np.int64)
            for a, b in zip(kk.leaves_numba(w), kk.leaves_numpy(w)):
                np.testing.assert_array_equal(a, b)


@needs_numba
@pytest.mark.parametrize("M,N", [(1, 1), (5, 3), (40, 70), (300, 300)])
def test_recursion_kernels_agree(M, N):
    np.testing.assert_array_equal(kk.beyond_rec_numba(M, N), kk.beyond_rec_numpy(M, N))


def test_recursion_kernel_reports_no_mismatch():
    checked, bad, m0, n0 = kk.beyond_rec_arrays(200, 200)
    assert bad == 0 and (m0, n0) == (-1, -1) and checked > 200 * 200


def test_env_flag_selects_numpy():
    env = dict(os.environ, KLA2_NUMBA="0")
    out = subprocess.run(
        [sys.executable, "-c", "from kla2 import _kernels as k; print(k.USE_NUMBA)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
