from __future__ import annotations

import os
import random
import subprocess
import sys

import numpy as np

from injcolor import kernels
from injcolor.density import _nbr_masks
from injcolor.gen import random_bounded

SCRIPT = """
from injcolor import gen
from injcolor.density import mad_exact, mad_bruteforce
from injcolor.solver import color_injective
from injcolor._accel import HAVE_NUMBA
g = gen.subdivide(gen.heawood(), 1)
print(HAVE_NUMBA, mad_exact(g).density, mad_bruteforce(gen.petersen()), color_injective(g)[0].colors)
"""


def run(disable):
    env = dict(os.environ)
    env.pop("INJCOLOR_DISABLE_NUMBA", None)
    if disable:
        env["INJCOLOR_DISABLE_NUMBA"] = "1"
    return subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True,
                          check=True).stdout.split(" ", 1)


def test_fallback_path_agrees():
    fast_flag, fast = run(False)
    slow_flag, slow = run(True)
    assert slow_flag == "False"
    assert fast == slow


def test_numpy_densest_subset_matches_loop():
    rng = random.Random(2)
    for _ in range(20):
        g = random_bounded(11, [4] * 11, rng)
        eu = np.array([u for u, _ in g.edges()], np.int64)
        ev = np.array([v for _, v in g.edges()], np.int64)
        a = kernels.densest_subset_loop.py_func(g.n, _nbr_masks(g))
        b = kernels.densest_subset_numpy(g.n, eu, ev, chunk=97)
        assert tuple(map(int, a)) == tuple(map(int, b))
