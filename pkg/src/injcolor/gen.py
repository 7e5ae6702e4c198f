"""Graph generators: the Fano incidence graph, classic families, subdivisions,
seeded random sparse graphs and the test corpora built from them."""

from __future__ import annotations

import random
from collections import deque
from fractions import Fraction
from typing import Iterator

from .density import mad_exact
from .errors import BadParameter, GenerationFailed
from .graph import Graph, girth

# ---------------------------------------------------------------------------
# fixed graphs
# ---------------------------------------------------------------------------

FANO_OFFSETS = (0, 1, 3)
# line {6, 0, 2}: through the first, third and seventh point when counting from 1
FANO_REMOVED_LINE = 13


def fano_incidence() -> Graph:
    """Points 0..6, line i (vertex 7 + i) through points i, i+1, i+3 mod 7."""
    edges = [(p, 7 + i) for i in range(7) for p in sorted((i + o) % 7 for o in FANO_OFFSETS)]
    return Graph(14, edges)


def fano_minus_vertex() -> Graph:
    return fano_incidence().without([FANO_REMOVED_LINE])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise BadParameter("a path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    """K_{1,k}: center 0, leaves 1..k."""
    if k < 0:
        raise BadParameter("star size must be nonnegative")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParameter("complete graph needs at least 1 vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def lcf(n: int, shifts: list[int], repeats: int) -> Graph:
    edges = {(i, (i + 1) % n) for i in range(n)}
    seq = shifts * repeats
    for i in range(n):
        j = (i + seq[i % len(seq)]) % n
        edges.add((min(i, j), max(i, j)))
    edges = {(min(a, b), max(a, b)) for a, b in edges}
    return Graph(n, sorted(edges))


def heawood() -> Graph:
    g = lcf(14, [5, -5], 7)
    # the unique cubic graph of girth 6 on 14 vertices, hence the Fano incidence graph
    assert g.n == 14 and set(g.degrees()) == {3} and girth(g) == 6
    return g


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


CLASSICS = {
    "cycle": cycle,
    "path": path,
    "star": star,
    "complete": complete,
    "heawood": heawood,
    "petersen": petersen,
    "fano": fano_incidence,
    "fano-minus": fano_minus_vertex,
}


def classics(name: str, n: int | None = None) -> Graph:
    if name not in CLASSICS:
        raise BadParameter(f"unknown family {name!r}")
    fn = CLASSICS[name]
    if name in ("cycle", "path", "star", "complete"):
        if n is None:
            raise BadParameter(f"family {name!r} needs a size")
        return fn(n)
    return fn()


# ---------------------------------------------------------------------------
# subdivision
# ---------------------------------------------------------------------------


def subdivide(g: Graph, times_per_edge: int | dict = 1) -> Graph:
    """Replace each edge by a path with ``times_per_edge`` interior vertices.

    A dict maps edges (u < v) to their own count; missing edges stay intact.
    New vertices are numbered after the old ones, edge by edge.
    """
    if isinstance(times_per_edge, int) and times_per_edge < 0:
        raise BadParameter("times_per_edge must be >= 0")
    n = g.n
    edges = []
    for u, v in g.edges():
        k = times_per_edge if isinstance(times_per_edge, int) else times_per_edge.get((u, v), 0)
        prev = u
        for _ in range(k):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, v))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# random graphs
# ---------------------------------------------------------------------------


def _within(adj: list[set[int]], s: int, t: int, limit: int) -> bool:
    """True if t is at distance < limit from s."""
    if s == t:
        return True
    seen = {s}
    frontier = [s]
    for _ in range(limit - 1):
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w == t:
                    return True
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return False


def random_bounded(n: int, caps: list[int], rng: random.Random, min_girth: int = 3,
                   target_edges: int | None = None) -> Graph:
    """Random greedy edge addition under per-vertex degree caps and a girth floor."""
    adj: list[set[int]] = [set() for _ in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    m = 0
    for i, j in pairs:
        if target_edges is not None and m >= target_edges:
            break
        if len(adj[i]) >= caps[i] or len(adj[j]) >= caps[j] or j in adj[i]:
            continue
        if min_girth > 3 and _within(adj, i, j, min_girth - 1):
            continue
        adj[i].add(j)
        adj[j].add(i)
        m += 1
    return Graph.from_sets(adj)


def random_regular(n: int, d: int, seed: int, min_girth: int = 3, tries: int = 500) -> Graph:
    """A d-regular graph of girth >= min_girth by randomized greedy matching of
    deficient vertices, restarted until it closes up."""
    if n * d % 2 or d >= n:
        raise BadParameter(f"no {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(tries):
        adj: list[set[int]] = [set() for _ in range(n)]
        stuck = False
        while True:
            open_ = [v for v in range(n) if len(adj[v]) < d]
            if not open_:
                return Graph.from_sets(adj)
            v = min(open_, key=lambda x: (len(adj[x]) - d, rng.random()))
            cands = [w for w in open_ if w != v and w not in adj[v]
                     and not (min_girth > 3 and _within(adj, v, w, min_girth - 1))]
            if not cands:
                stuck = True
                break
            w = rng.choice(cands)
            adj[v].add(w)
            adj[w].add(v)
        if stuck:
            continue
    raise GenerationFailed(f"no {d}-regular girth-{min_girth} graph on {n} vertices after {tries} tries")


def girth_target(bound: Fraction) -> int:
    """Smallest g with 2g/(g-2) < bound (the planar girth heuristic)."""
    g = 3
    while Fraction(2 * g, g - 2) >= bound:
        g += 1
        if g > 64:
            break
    return g


def random_sparse(n: int, delta_max: int, mad_bound, seed: int, tries: int = 40) -> Graph:
    """Seeded graph with maximum degree exactly ``delta_max`` and mad < ``mad_bound``.

    Edges are added in random order under a girth floor; an edge that would lift
    the maximum average degree to the bound is rejected.  A vertex is first
    grown to full degree so the maximum degree is reached.
    """
    bound = Fraction(mad_bound)
    if delta_max < 0 or n < 1:
        raise BadParameter("need n >= 1 and delta_max >= 0")
    if delta_max >= n or bound <= 0:
        raise GenerationFailed(f"parameters n={n}, delta={delta_max}, bound={bound} are infeasible")
    min_girth = min(girth_target(bound), 8)
    rng = random.Random(seed)
    for _ in range(tries):
        adj: list[set[int]] = [set() for _ in range(n)]
        hub = rng.randrange(n)
        order = [w for w in range(n) if w != hub]
        rng.shuffle(order)
        pairs = [(hub, w) for w in order]
        rest = [(i, j) for i in range(n) for j in range(i + 1, n)]
        rng.shuffle(rest)
        pairs += rest
        for i, j in pairs:
            if j in adj[i] or len(adj[i]) >= delta_max or len(adj[j]) >= delta_max:
                continue
            if min_girth > 3 and _within(adj, i, j, min_girth - 1):
                continue
            adj[i].add(j)
            adj[j].add(i)
            if mad_exact(Graph.from_sets(adj)).density >= bound:
                adj[i].discard(j)
                adj[j].discard(i)
        g = Graph.from_sets(adj)
        if g.max_degree == delta_max and mad_exact(g).density < bound:
            return g
    raise GenerationFailed(f"no graph with n={n}, delta={delta_max}, mad < {bound} after {tries} tries")


# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------


def quartic_girth5(seed: int = 7, n: int = 24) -> Graph:
    return random_regular(n, 4, seed, min_girth=5)


def k_gadget(seed: int = 7) -> Graph:
    """Fully subdivided 4-regular graph of girth 5: the auxiliary graph is the
    base graph, every base vertex has four 2-neighbours, the shortest cycle of
    H has length 5 and lifts to a 10-cycle through the special vertex."""
    return subdivide(quartic_girth5(seed), 1)


def _accept(g: Graph, delta: int, bound: Fraction, max_n: int) -> bool:
    return 0 < g.n <= max_n and g.max_degree == delta and mad_exact(g).density < bound


def _partial_subdivision(base: Graph, rng: random.Random, p: float, p_double: float = 0.0) -> Graph:
    counts = {}
    for e in base.edges():
        r = rng.random()
        counts[e] = 2 if r < p_double else 1 if r < p_double + p else 0
    return subdivide(base, counts)


def corpus_delta3(count: int = 200, seed: int = 0, max_n: int = 60) -> list[tuple[str, Graph]]:
    """Delta = 3 graphs with mad < 36/13, n <= max_n."""
    rng = random.Random(seed)
    bound = Fraction(36, 13)
    out: list[tuple[str, Graph]] = []
    # full subdivisions of cubic graphs of girth >= 4 (so girth >= 8 afterwards)
    for nb in range(6, 25, 2):
        for k in range(3):
            base = random_regular(nb, 3, rng.randrange(1 << 30), min_girth=4)
            out.append((f"sub-cubic-{nb}-{k}", subdivide(base, 1)))
    out.append(("sub-heawood", subdivide(heawood(), 1)))
    out.append(("sub-petersen", subdivide(petersen(), 1)))
    kinds = ("partial", "partial-double", "random")
    i = 0
    while len(out) < count:
        kind = kinds[i % 3]
        i += 1
        s = rng.randrange(1 << 30)
        if kind == "random":
            g = random_sparse(rng.randint(8, 40), 3, bound, s)
        else:
            nb = rng.choice(range(6, 27, 2))
            base = random_regular(nb, 3, s, min_girth=rng.choice((3, 4, 5) if nb >= 14 else (3, 4)))
            r = random.Random(s)
            g = _partial_subdivision(base, r, r.uniform(0.25, 0.9), 0.15 if kind == "partial-double" else 0.0)
        if _accept(g, 3, bound, max_n):
            out.append((f"{kind}-{s}", g))
    return out[:count]


def _min_degree_base(n: int, low: int, delta: int, rng: random.Random, tries: int = 50) -> Graph | None:
    for _ in range(tries):
        caps = [rng.randint(min(low, delta), delta) for _ in range(n)]
        caps[0] = delta
        base = random_bounded(n, caps, rng, min_girth=rng.choice((3, 4, 5)))
        if min(base.degrees()) >= 3 and base.max_degree == delta:
            return base
    return None


def rc_free_subdivision(base: Graph, delta: int, rng: random.Random) -> Graph:
    """Subdivide edges of ``base`` one at a time in random order, keeping each
    subdivision only if no bounded reducible configuration appears."""
    from .reduce import case_for, find_config

    case = case_for(delta)
    counts: dict[tuple[int, int], int] = {}
    edges = base.edges()
    rng.shuffle(edges)
    for e in edges:
        counts[e] = 1
        if find_config(subdivide(base, counts), case, delta) is not None:
            del counts[e]
    return subdivide(base, counts)


def corpus_general(delta: int, count: int = 60, seed: int = 0, max_n: int = 60) -> list[tuple[str, Graph]]:
    """Graphs of maximum degree ``delta`` >= 4 with mad < 14/5, n <= max_n.

    Besides random and subdivided graphs the corpus holds "tight" members: base
    graphs of minimum degree 3 subdivided as far as possible without creating a
    bounded reducible configuration, so only the auxiliary-graph argument (or
    the final density bound) can make progress on them.
    """
    if delta < 4:
        raise BadParameter("use corpus_delta3 for maximum degree 3")
    rng = random.Random(seed * 1000 + delta)
    bound = Fraction(14, 5)
    out: list[tuple[str, Graph]] = []
    if delta == 4:
        for nb in (8, 10, 12, 14, 16, 18, 20):
            for k in range(2):
                base = random_regular(nb, 4, rng.randrange(1 << 30), min_girth=4 if nb >= 12 else 3)
                out.append((f"sub-quartic-{nb}-{k}", subdivide(base, 1)))
    kinds = ("mixed", "tight", "mixed-partial", "tight", "random")
    i = 0
    guard = 0
    while len(out) < count:
        guard += 1
        if guard > 50 * count:
            raise GenerationFailed(f"corpus for delta={delta} did not fill up")
        kind = kinds[i % len(kinds)]
        i += 1
        s = rng.randrange(1 << 30)
        r = random.Random(s)
        if kind == "random":
            g = random_sparse(r.randint(10, 40), delta, bound, s)
        elif kind == "tight":
            base = _min_degree_base(r.randint(delta + 1, 22), r.choice((3, 4)), delta, r)
            if base is None:
                continue
            g = rc_free_subdivision(base, delta, r)
        else:
            nb = r.randint(max(delta + 1, 6), 20)
            caps = [r.choice(range(3, delta + 1)) for _ in range(nb)]
            caps[0] = delta
            base = random_bounded(nb, caps, r, min_girth=r.choice((3, 4, 5)))
            if kind == "mixed":
                g = subdivide(base, 1)
            else:
                g = _partial_subdivision(base, r, r.uniform(0.7, 1.0), r.uniform(0.0, 0.1))
        if _accept(g, delta, bound, max_n):
            out.append((f"{kind}-{s}", g))
    return out[:count]


def rc_free_corpus(delta: int, count: int = 40, seed: int = 0, max_n: int = 60) -> list[tuple[str, Graph]]:
    """Graphs of maximum degree ``delta`` with no bounded reducible configuration."""
    from .reduce import case_for, find_config

    rng = random.Random(seed * 7919 + delta)
    out: list[tuple[str, Graph]] = []
    guard = 0
    while len(out) < count:
        guard += 1
        if guard > 100 * count:
            raise GenerationFailed(f"rc-free corpus for delta={delta} did not fill up")
        s = rng.randrange(1 << 30)
        r = random.Random(s)
        base = _min_degree_base(r.randint(delta + 1, 20), 3, delta, r)
        if base is None:
            continue
        g = rc_free_subdivision(base, delta, r)
        if g.n <= max_n and g.max_degree == delta and find_config(g, case_for(delta), delta) is None:
            out.append((f"rcfree-{s}", g))
    return out


def iter_corpora(seed: int = 0) -> Iterator[tuple[int, str, Graph]]:
    for name, g in corpus_delta3(seed=seed):
        yield 3, name, g
    for d in (4, 5, 6, 7):
        for name, g in corpus_general(d, seed=seed):
            yield d, name, g
