"""Time the compiled kernels against their plain Python / numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat R] [--seed S]

The compiled path only exists when numba is importable and
INJCOLOR_DISABLE_NUMBA is unset; otherwise the compiled column shows "-".
Every row also checks that both paths return the same answer.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from injcolor import kernels
from injcolor._accel import HAVE_NUMBA
from injcolor.density import _GoldbergNetwork, _nbr_masks, mad_exact
from injcolor.gen import corpus_delta3, random_bounded
from injcolor.graph import Graph


def best_of(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def _flow_arrays(g: Graph, lam):
    # reuse the network builder, but capture the arrays instead of solving
    captured = {}
    orig = kernels.max_flow

    def grab(n, s, t, head, nxt, to, cap):
        captured.update(n=n, s=s, t=t, head=head.copy(), nxt=nxt.copy(), to=to.copy(), cap=cap.copy())
        return orig(n, s, t, head, nxt, to, cap)

    kernels.max_flow = grab
    try:
        _GoldbergNetwork(g).denser_than(lam)
    finally:
        kernels.max_flow = orig
    return captured


def bench_flow(graphs, repeat):
    jobs = [_flow_arrays(g, mad_exact(g).density) for g in graphs]

    def run(fn):
        return [fn(j["n"], j["s"], j["t"], j["head"], j["nxt"], j["to"], j["cap"].copy()) for j in jobs]

    return run(kernels.max_flow), run(kernels.max_flow.py_func), best_of(lambda: run(kernels.max_flow), repeat), \
        best_of(lambda: run(kernels.max_flow.py_func), repeat)


def row(name, fast, slow, same):
    ft = "-" if fast is None else f"{fast * 1e3:9.2f}"
    ratio = "-" if fast is None else f"{slow / fast:7.1f}x"
    print(f"{name:<28} {ft:>10} {slow * 1e3:10.2f} {ratio:>9}  {'ok' if same else 'MISMATCH'}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)

    print(f"numba active: {HAVE_NUMBA}")
    print(f"{'kernel':<28} {'compiled ms':>10} {'python ms':>10} {'speedup':>9}  check")

    # Dinic max-flow on Goldberg networks of corpus graphs
    graphs = [g for _, g in corpus_delta3(40, seed=args.seed, max_n=60)]
    a, b, (_, t_fast), (_, t_slow) = bench_flow(graphs, args.repeat)
    row("max_flow (40 networks)", t_fast if HAVE_NUMBA else None, t_slow, a == b)

    # exhaustive densest subset: loop kernel vs vectorized numpy
    g = random_bounded(16, [5] * 16, rng, target_edges=28)
    masks = _nbr_masks(g)
    eu = np.array([u for u, _ in g.edges()], np.int64)
    ev = np.array([v for _, v in g.edges()], np.int64)
    kernels.densest_subset_loop(g.n, masks)  # warm up the compiler
    r_fast, t_fast = best_of(lambda: kernels.densest_subset_loop(g.n, masks), args.repeat)
    r_np, t_np = best_of(lambda: kernels.densest_subset_numpy(g.n, eu, ev), args.repeat)
    same = tuple(map(int, r_fast)) == tuple(map(int, r_np))
    row("densest_subset n=16 (numpy)", t_fast if HAVE_NUMBA else None, t_np, same)
    small = random_bounded(12, [4] * 12, rng, target_edges=18)
    m12 = _nbr_masks(small)
    r_fast, t_fast = best_of(lambda: kernels.densest_subset_loop(small.n, m12), args.repeat)
    r_py, t_py = best_of(lambda: kernels.densest_subset_loop.py_func(small.n, m12), 1)
    row("densest_subset n=12 (python)", t_fast if HAVE_NUMBA else None, t_py,
        tuple(map(int, r_fast)) == tuple(map(int, r_py)))

    # naive injective search at the optimum palette
    h = random_bounded(9, [4] * 9, rng, target_edges=14)
    hm = _nbr_masks(h)
    out = np.zeros(h.n, np.int64)
    k = 1
    while not kernels.injective_search(h.n, hm, k, out):
        k += 1
    _, t_fast = best_of(lambda: [kernels.injective_search(h.n, hm, c, out) for c in range(1, k + 1)], args.repeat)
    _, t_py = best_of(lambda: [kernels.injective_search.py_func(h.n, hm, c, out) for c in range(1, k + 1)], 1)
    found = [kernels.injective_search.py_func(h.n, hm, c, out) for c in range(1, k + 1)]
    row(f"injective_search n=9 k<={k}", t_fast if HAVE_NUMBA else None, t_py, found[-1] and not any(found[:-1]))


if __name__ == "__main__":
    main()
