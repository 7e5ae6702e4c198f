"""Exact maximum average degree.

``mad_exact`` runs a binary search over candidate average degrees; each probe
is one minimum cut in Goldberg's densest-subgraph network, built with integer
capacities scaled by the probe's denominator.  Distinct candidate values
``2e/k`` with ``k <= n`` differ by at least ``1/n^2``, which bounds the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

import numpy as np

from . import kernels
from .errors import EmptyGraph, TooLarge
from .graph import Graph


@dataclass(frozen=True)
class DensityWitness:
    subset: tuple[int, ...]
    density: Fraction


def subset_density(g: Graph, subset) -> Fraction:
    s = set(subset)
    if not s:
        raise ValueError("empty subset")
    e = sum(1 for v in s for w in g.adj(v) if w in s) // 2
    return Fraction(2 * e, len(s))


class _GoldbergNetwork:
    """Arc arrays for the source/sink gadget; rebuilt per probe."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n + 2
        self.s = g.n
        self.t = g.n + 1
        self.maxdeg = g.max_degree
        self.edges = g.edges()

    def denser_than(self, lam: Fraction) -> list[int]:
        """Vertices of the minimal min-cut side; nonempty iff some subgraph has
        average degree strictly above ``lam``."""
        g = self.g
        a, b = lam.numerator, lam.denominator
        big = b * self.maxdeg
        narcs = 2 * (2 * g.n + len(self.edges))
        head = np.full(self.n, -1, np.int64)
        nxt = np.empty(narcs, np.int64)
        to = np.empty(narcs, np.int64)
        cap = np.empty(narcs, np.int64)
        k = 0

        def arc(u, v, c_fwd, c_back):
            nonlocal k
            to[k], cap[k], nxt[k] = v, c_fwd, head[u]
            head[u] = k
            to[k + 1], cap[k + 1], nxt[k + 1] = u, c_back, head[v]
            head[v] = k + 1
            k += 2

        for v in range(g.n):
            arc(self.s, v, big, 0)
            arc(v, self.t, big + a - b * g.degree(v), 0)
        for u, v in self.edges:
            arc(u, v, b, b)
        kernels.max_flow(self.n, self.s, self.t, head, nxt, to, cap)
        seen = kernels.residual_reachable(self.n, self.s, head, nxt, to, cap)
        return [v for v in range(g.n) if seen[v]]


def mad_exact(g: Graph) -> DensityWitness:
    """Maximum over nonempty subgraphs of 2|E|/|V|, exactly, with a witness set."""
    n = g.n
    if n == 0:
        raise EmptyGraph("mad of the empty graph is undefined")
    if g.m == 0:
        return DensityWitness(tuple(range(n)), Fraction(0))
    net = _GoldbergNetwork(g)
    lo = Fraction(2 * g.m, n)
    hi = Fraction(g.max_degree)
    gap = Fraction(1, n * n)
    grid = 4 * n * n
    while hi - lo >= gap:
        mid = Fraction(ceil((lo + hi) / 2 * grid), grid)
        side = net.denser_than(mid)
        if side:
            lo = max(lo, subset_density(g, side))
        else:
            hi = mid
    # Just below the optimum only maximizers beat the probe, so the minimal
    # cut side is a (deterministic) densest subset.
    side = net.denser_than(lo - Fraction(1, 2 * n * n))
    dens = subset_density(g, side)
    if dens != lo:
        raise AssertionError(f"witness density {dens} differs from optimum {lo}")
    return DensityWitness(tuple(side), lo)


def _nbr_masks(g: Graph) -> np.ndarray:
    masks = np.zeros(g.n, np.int64)
    for v in range(g.n):
        m = 0
        for w in g.adj(v):
            m |= 1 << w
        masks[v] = m
    return masks


def mad_bruteforce(g: Graph) -> Fraction:
    """Exhaustive maximum over all 2^n - 1 nonempty vertex subsets (n <= 20)."""
    if g.n == 0:
        raise EmptyGraph("mad of the empty graph is undefined")
    if g.n > 20:
        raise TooLarge(f"brute force limited to 20 vertices, got {g.n}")
    eu = np.array([u for u, _ in g.edges()], np.int64)
    ev = np.array([v for _, v in g.edges()], np.int64)
    num, den, _ = kernels.densest_subset(g.n, _nbr_masks(g), eu, ev)
    return Fraction(int(num), int(den))


def satisfies_hypothesis(g: Graph, bound: Fraction) -> bool:
    """Strict test ``mad(g) < bound`` in exact arithmetic."""
    return mad_exact(g).density < Fraction(bound)
