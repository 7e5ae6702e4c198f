"""Exact and constructive (list-)coloring engines.

The constructive side covers the two classical guarantees for a connected
graph with ``|L(v)| >= d(v)``:

* a vertex with a spare color makes the graph colorable (greedy, farthest
  vertex first, the spare vertex last);
* otherwise the graph is colorable unless every block is a clique or an odd
  cycle.  When some block is neither, the rest of the graph is colored toward
  that block and the block itself is finished by the 2-connected argument
  (non-identical lists) or by Lovasz's form of Brooks' theorem.

Only instances outside both guarantees fall through to exhaustive search.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping, Sequence

from .errors import Disconnected, FallbackExceeded, PreconditionViolated
from .graph import Coloring, Graph, block_vertex_sets

ListAssignment = Mapping[int, Iterable[int]] | Sequence[Iterable[int]]

DEFAULT_SEARCH_CAP = 24


def _norm_lists(g: Graph, lists: ListAssignment) -> list[frozenset[int]]:
    if isinstance(lists, Mapping):
        out = [frozenset(lists[v]) for v in range(g.n)]
    else:
        out = [frozenset(x) for x in lists]
    if len(out) != g.n:
        raise ValueError("one list per vertex required")
    for v, lst in enumerate(out):
        if any(c < 1 for c in lst):
            raise ValueError(f"list of vertex {v} holds a non-positive color")
    return out


def _palette_of(lists: Sequence[frozenset[int]], colors: Sequence[int]) -> int:
    return max([max(l) for l in lists if l] + [c for c in colors] + [1])


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------


def _search(adj: Sequence[Sequence[int]], lists: Sequence[Iterable[int]], symmetric: bool = False,
            fixed: Mapping[int, int] | None = None) -> list[int] | None:
    """Backtracking with fewest-options-first vertex choice.

    ``symmetric`` marks interchangeable colors 1..k: a vertex may then open at
    most one new color, which removes permutation duplicates.
    """
    n = len(adj)
    lists = [sorted(set(l)) for l in lists]
    color = [0] * n
    blocked = [dict() for _ in range(n)]
    deg = [len(a) for a in adj]
    top = 0

    def place(v, c):
        color[v] = c
        for w in adj[v]:
            blocked[w][c] = blocked[w].get(c, 0) + 1

    def unplace(v, c):
        color[v] = 0
        for w in adj[v]:
            blocked[w][c] -= 1

    for v, c in (fixed or {}).items():
        if blocked[v].get(c, 0):
            return None
        place(v, c)
        top = max(top, c)
    todo = n - len(fixed or {})

    def options(v):
        return [c for c in lists[v] if not blocked[v].get(c, 0)]

    def rec(left, top):
        if left == 0:
            return True
        best = None
        best_key = None
        for v in range(n):
            if color[v]:
                continue
            opts = options(v)
            key = (len(opts), -deg[v], v)
            if best_key is None or key < best_key:
                best, best_key, best_opts = v, key, opts
                if not opts:
                    return False
        for c in best_opts:
            if symmetric and c > top + 1:
                break
            place(best, c)
            if rec(left - 1, max(top, c)):
                return True
            unplace(best, c)
        return False

    return list(color) if rec(todo, top) else None


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from each vertex; the largest one found."""
    best: list[int] = []
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for s in order:
        clique = [s]
        cand = set(g.adj(s))
        while cand:
            v = max(cand, key=lambda x: (len(cand & g.nbr_set(x)), -x))
            clique.append(v)
            cand &= g.nbr_set(v)
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def chi_exact(g: Graph, upper_bound: int) -> tuple[int, Coloring] | None:
    """Smallest k <= upper_bound with a proper k-coloring, or None if there is none."""
    if upper_bound < 1:
        raise ValueError("upper_bound must be >= 1")
    if g.n == 0:
        return 0, Coloring((), 1)
    clique = greedy_clique(g)
    fixed = {v: i + 1 for i, v in enumerate(clique)}
    adj = [g.adj(v) for v in range(g.n)]
    for k in range(max(1, len(clique)), upper_bound + 1):
        col = _search(adj, [range(1, k + 1)] * g.n, symmetric=True, fixed=fixed)
        if col is not None:
            return k, Coloring(col, k)
    return None


def list_color_exact(g: Graph, lists: ListAssignment) -> Coloring | None:
    """A proper coloring with c(v) in L(v), or None when none exists (complete)."""
    L = _norm_lists(g, lists)
    if any(not l for l in L):
        return None
    col = _search([g.adj(v) for v in range(g.n)], L)
    if col is None:
        return None
    return Coloring(col, _palette_of(L, col))


# ---------------------------------------------------------------------------
# block structure
# ---------------------------------------------------------------------------


def _is_clique_or_odd_cycle(g: Graph, verts: Sequence[int]) -> bool:
    k = len(verts)
    s = set(verts)
    e = sum(1 for v in verts for w in g.adj(v) if w in s) // 2
    if e == k * (k - 1) // 2:
        return True
    return k >= 3 and k % 2 == 1 and e == k


def is_gallai_structure(g: Graph) -> tuple[bool, Graph | None]:
    """True iff every block is a clique or an odd cycle; otherwise the first
    offending block is returned as certificate."""
    if not g.is_connected():
        raise Disconnected("Gallai test needs a connected graph")
    for b in block_vertex_sets(g):
        if not _is_clique_or_odd_cycle(g, b):
            return False, g.induced(b)
    return True, None


# ---------------------------------------------------------------------------
# constructive extensions
# ---------------------------------------------------------------------------


def _greedy_toward(adj_of, verts: Sequence[int], target: Iterable[int], lists, color: dict) -> None:
    """Color ``verts`` farthest-from-``target`` first, target vertices last.

    ``adj_of(v)`` yields neighbours; neighbours outside ``verts`` that are
    already in ``color`` restrict the choice.  Raises PreconditionViolated if a
    vertex runs out of colors.
    """
    inside = set(verts)
    dist = {v: -1 for v in verts}
    q = deque()
    for t in target:
        dist[t] = 0
        q.append(t)
    while q:
        v = q.popleft()
        for w in adj_of(v):
            if w in inside and dist[w] == -1:
                dist[w] = dist[v] + 1
                q.append(w)
    for v in sorted(verts, key=lambda x: (-dist[x], x)):
        taken = {color[w] for w in adj_of(v) if w in color}
        free = sorted(lists[v] - taken)
        if not free:
            raise PreconditionViolated(v, "no color left during greedy extension")
        color[v] = free[0]


def _check_connected(g: Graph, start: int) -> None:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != g.n:
        missing = min(set(range(g.n)) - seen)
        raise PreconditionViolated(missing, "graph is not connected")


def extend_surplus(g: Graph, lists: ListAssignment, y: int) -> Coloring:
    """Spare-color coloring: |L(v)| >= d(v) everywhere, |L(y)| > d(y)."""
    L = _norm_lists(g, lists)
    _check_connected(g, y)
    for v in range(g.n):
        if len(L[v]) < g.degree(v):
            raise PreconditionViolated(v, f"|L| = {len(L[v])} < degree {g.degree(v)}")
    if len(L[y]) <= g.degree(y):
        raise PreconditionViolated(y, "no surplus at the chosen vertex")
    color: dict[int, int] = {}
    _greedy_toward(g.adj, range(g.n), [y], L, color)
    col = [color[v] for v in range(g.n)]
    return Coloring(col, _palette_of(L, col))


def _two_connected_color(g: Graph, verts: Sequence[int], L, color: dict) -> None:
    """Color the 2-connected induced subgraph on ``verts`` given lists that
    already exclude the colors of outside neighbours.  |L| >= inner degree
    everywhere and the block is not a clique or odd cycle, or some list differs."""
    vs = set(verts)

    def inner(v):
        return [w for w in g.adj(v) if w in vs]

    for v in verts:
        if len(L[v]) > len(inner(v)):
            _greedy_toward(inner, verts, [v], L, color)
            return
    # non-identical lists: color x with a color its neighbour y lacks
    for x in verts:
        for y in inner(x):
            spare = sorted(L[x] - L[y])
            if spare:
                c = spare[0]
                color[x] = c
                rest = [v for v in verts if v != x]
                L2 = {v: (L[v] - {c} if v in g.nbr_set(x) else L[v]) for v in rest}
                rest_set = set(rest)
                _greedy_toward(lambda v: [w for w in g.adj(v) if w in rest_set], rest, [y], L2, color)
                return
    k = len(inner(verts[0]))
    palette = L[verts[0]]
    if k == 2:
        # even cycle with identical 2-lists
        a, b = sorted(palette)
        start = min(verts)
        prev, cur, i = None, start, 0
        while True:
            color[cur] = a if i % 2 == 0 else b
            nxt = [w for w in inner(cur) if w != prev]
            prev, cur, i = cur, nxt[0], i + 1
            if cur == start:
                break
        return
    # Brooks: x with non-adjacent neighbours y, z such that the rest stays connected
    for x in sorted(verts):
        nb = sorted(inner(x))
        for i, y in enumerate(nb):
            for z in nb[i + 1:]:
                if g.has_edge(y, z):
                    continue
                rest = [v for v in verts if v not in (y, z)]
                rest_set = set(rest)
                if not _connected_within(g, rest_set):
                    continue
                c = min(palette)
                color[y] = color[z] = c
                _greedy_toward(inner, rest, [x], L, color)
                return
    raise PreconditionViolated(None, "block is a clique or an odd cycle")


def _connected_within(g: Graph, vs: set[int]) -> bool:
    if not vs:
        return True
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj(v):
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def degree_choosable_color(g: Graph, lists: ListAssignment, cap: int = DEFAULT_SEARCH_CAP) -> Coloring | None:
    """Color a connected graph whose lists are at least as long as the degrees.

    Succeeds whenever a spare color, non-identical lists on a 2-connected
    graph, or a block that is neither a clique nor an odd cycle guarantees a
    coloring.  Remaining instances go to exhaustive search (at most ``cap``
    vertices, else FallbackExceeded) and may return None.
    """
    L = _norm_lists(g, lists)
    if g.n == 0:
        return Coloring((), 1)
    _check_connected(g, 0)
    for v in range(g.n):
        if len(L[v]) < g.degree(v):
            raise PreconditionViolated(v, f"|L| = {len(L[v])} < degree {g.degree(v)}")
    for y in range(g.n):
        if len(L[y]) > g.degree(y):
            return extend_surplus(g, L, y)
    blks = block_vertex_sets(g)
    target = None
    if len(blks) == 1 and g.n >= 2 and len(set(L)) > 1:
        target = blks[0]
    else:
        target = next((b for b in blks if not _is_clique_or_odd_cycle(g, b)), None)
    if target is not None:
        color: dict[int, int] = {}
        tset = set(target)
        outside = [v for v in range(g.n) if v not in tset]
        if outside:
            # farthest first; each outside vertex keeps an uncolored neighbour
            # on its way to the block until it is colored itself
            _greedy_toward(g.adj, list(range(g.n)), target, L, _Partial(color, tset))
        L2 = {v: L[v] - {color[w] for w in g.adj(v) if w in color} for v in target}
        _two_connected_color(g, list(target), L2, color)
        col = [color[v] for v in range(g.n)]
        return Coloring(col, _palette_of(L, col))
    if g.n > cap:
        raise FallbackExceeded(f"{g.n} vertices exceed the search cap of {cap}")
    return list_color_exact(g, L)


class _Partial(dict):
    """Color sink that silently skips the protected vertex set.

    Lets ``_greedy_toward`` run over the whole graph (so distances are taken
    to the block) while leaving the block itself for the 2-connected step.
    """

    def __init__(self, backing: dict, skip: set[int]):
        super().__init__()
        self._backing = backing
        self._skip = skip

    def __contains__(self, v):
        return v in self._backing

    def __getitem__(self, v):
        return self._backing[v]

    def __setitem__(self, v, c):
        if v not in self._skip:
            self._backing[v] = c
