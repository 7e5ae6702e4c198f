"""Simple undirected graphs, their neighboring graphs, and coloring checks.

Vertices are the dense integers ``0..n-1``.  Every graph also carries one
label per vertex; labels compose through :meth:`Graph.induced`, so a vertex of
a deeply peeled subgraph still knows which input vertex it came from.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DuplicateEdge, MalformedComponent, SelfLoop, UncoloredVertex


class Graph:
    __slots__ = ("_adj", "_sets", "_labels", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise SelfLoop(u)
            if v in sets[u]:
                raise DuplicateEdge(u, v)
            sets[u].add(v)
            sets[v].add(u)
        self._init(sets, labels)

    def _init(self, sets, labels):
        self._adj = tuple(tuple(sorted(s)) for s in sets)
        self._sets = tuple(frozenset(s) for s in sets)
        self._m = sum(len(s) for s in sets) // 2
        n = len(sets)
        self._labels = tuple(range(n)) if labels is None else tuple(labels)
        if len(self._labels) != n:
            raise ValueError("one label per vertex required")

    @classmethod
    def from_sets(cls, sets: Sequence[Iterable[int]], labels: Sequence | None = None) -> "Graph":
        """Build from symmetric neighbour sets without re-validating them."""
        g = cls.__new__(cls)
        g._init([set(s) for s in sets], labels)
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def labels(self) -> tuple:
        return self._labels

    def adj(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def nbr_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``; new vertex i is the i-th smallest kept id."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        sets = [[index[w] for w in self._adj[v] if w in index] for v in keep]
        return Graph.from_sets(sets, [self._labels[v] for v in keep])

    def without(self, removed: Iterable[int]) -> "Graph":
        removed = set(removed)
        return self.induced(v for v in range(self.n) if v not in removed)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..palette`` per vertex; 0 marks an uncolored vertex."""

    colors: tuple[int, ...]
    palette: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for v, c in enumerate(self.colors):
            if c < 0 or c > self.palette:
                raise ValueError(f"color {c} at vertex {v} outside [1, {self.palette}]")

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def is_total(self) -> bool:
        return all(c > 0 for c in self.colors)

    @property
    def used(self) -> int:
        """Number of distinct colors actually used."""
        return len({c for c in self.colors if c})


class Violation(NamedTuple):
    u: int
    v: int
    shared_neighbor: int


# ---------------------------------------------------------------------------
# derived graphs
# ---------------------------------------------------------------------------


def square_sets(g: Graph) -> list[set[int]]:
    sets: list[set[int]] = [set() for _ in range(g.n)]
    for w in range(g.n):
        nb = g.adj(w)
        for i, a in enumerate(nb):
            for b in nb[i + 1 :]:
                sets[a].add(b)
                sets[b].add(a)
    return sets


def neighboring_graph(g: Graph) -> Graph:
    """Same vertices; u ~ v iff u != v and they share a neighbour in ``g``."""
    return Graph.from_sets(square_sets(g), g.labels)


@dataclass(frozen=True)
class PrunedSquare:
    """A neighboring graph with low-degree vertices removed.

    ``adj`` maps each kept vertex (an id of the original graph) to its kept
    neighbours; ``deleted`` lists removed vertices in the order they are
    colored greedily at the end.
    """

    adj: dict[int, frozenset[int]]
    deleted: tuple[int, ...]
    square_degree: tuple[int, ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def _pruned(g: Graph, doomed) -> PrunedSquare:
    sq = square_sets(g)
    sqdeg = tuple(len(s) for s in sq)
    deleted = tuple(v for v in range(g.n) if doomed(v, sqdeg[v]))
    gone = set(deleted)
    adj = {v: frozenset(w for w in sq[v] if w not in gone) for v in range(g.n) if v not in gone}
    return PrunedSquare(adj, deleted, sqdeg)


def hat_square(g: Graph) -> PrunedSquare:
    """Drop 2-vertices whose neighboring-graph degree is at most 5."""
    return _pruned(g, lambda v, d: g.degree(v) == 2 and d <= 5)


def tilde_square(g: Graph) -> PrunedSquare:
    """Drop every vertex whose neighboring-graph degree is at most 6."""
    return _pruned(g, lambda v, d: d <= 6)


def _as_graph(g: Graph, ps: PrunedSquare) -> tuple[Graph, tuple[int, ...]]:
    keep = sorted(ps.adj)
    index = {v: i for i, v in enumerate(keep)}
    sets = [[index[w] for w in ps.adj[v]] for v in keep]
    return Graph.from_sets(sets, [g.labels[v] for v in keep]), ps.deleted


def pruned_square_hat(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """The hat-pruned neighboring graph and the deleted vertices (greedy order)."""
    return _as_graph(g, hat_square(g))


def pruned_square_tilde(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """The tilde-pruned neighboring graph and the deleted vertices (greedy order)."""
    return _as_graph(g, tilde_square(g))


# ---------------------------------------------------------------------------
# blocks
# ---------------------------------------------------------------------------


def block_vertex_sets(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the blocks (isolated vertices are singleton blocks).

    Iterative Hopcroft-Tarjan with an edge stack.  Output is sorted by
    (smallest vertex, vertex tuple).
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[tuple[int, ...]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            disc[root] = timer
            timer += 1
            out.append((root,))
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adj(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adj(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                verts = set()
                while True:
                    a, b = estack.pop()
                    verts.add(a)
                    verts.add(b)
                    if (a, b) == (parent, v):
                        break
                out.append(tuple(sorted(verts)))
    out.sort(key=lambda b: (b[0], b))
    return out


def blocks(g: Graph) -> list[Graph]:
    """Block decomposition; each block keeps ``g``'s labels of its vertices."""
    return [g.induced(b) for b in block_vertex_sets(g)]


# ---------------------------------------------------------------------------
# coloring checks
# ---------------------------------------------------------------------------


def verify_injective(g: Graph, c: Coloring) -> Violation | None:
    """None if ``c`` is injective on ``g``, else the lexicographically first clash."""
    if len(c) != g.n:
        raise ValueError("coloring length does not match the graph")
    for v, col in enumerate(c.colors):
        if col == 0:
            raise UncoloredVertex(v)
    sq = square_sets(g)
    for u in range(g.n):
        for v in sorted(sq[u]):
            if v > u and c[u] == c[v]:
                w = min(g.nbr_set(u) & g.nbr_set(v))
                return Violation(u, v, w)
    return None


def is_proper(adj: Sequence[Iterable[int]] | dict, colors: Sequence[int]) -> bool:
    items = adj.items() if isinstance(adj, dict) else enumerate(adj)
    for v, nb in items:
        for w in nb:
            if colors[v] == colors[w]:
                return False
    return True


# ---------------------------------------------------------------------------
# threads
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Thread:
    ends: tuple[int, int]
    interior: tuple[int, ...]

    @property
    def length(self) -> int:
        """Number of interior 2-vertices."""
        return len(self.interior)


@dataclass(frozen=True)
class ThreadInfo:
    threads: tuple[Thread, ...]
    nearby: dict[int, tuple[int, ...]]


def threads_and_nearby(g: Graph) -> ThreadInfo:
    """Maximal threads (interior 2-vertices, 3+-vertex ends) and the nearby relation.

    ``nearby`` maps each 3+-vertex to the 2-vertices on its threads and each
    threaded 2-vertex to its thread's endpoints.
    """
    deg = g.degrees()
    found: dict[tuple, Thread] = {}
    covered: set[int] = set()
    for a in range(g.n):
        if deg[a] < 3:
            continue
        for first in g.adj(a):
            if deg[first] != 2:
                continue
            interior = [first]
            prev, cur = a, first
            while True:
                nxt = g.adj(cur)[0] if g.adj(cur)[1] == prev else g.adj(cur)[1]
                if deg[nxt] == 2:
                    if nxt in interior:
                        raise MalformedComponent(f"2-vertex cycle through {nxt}")
                    interior.append(nxt)
                    prev, cur = cur, nxt
                    continue
                if deg[nxt] < 2:
                    raise MalformedComponent(f"thread from {a} ends at {deg[nxt]}-vertex {nxt}")
                b = nxt
                break
            fwd = (a, tuple(interior), b)
            rev = (b, tuple(reversed(interior)), a)
            key = min(fwd, rev)
            if key not in found:
                found[key] = Thread((key[0], key[2]), key[1])
            covered.update(interior)
    for v in range(g.n):
        if deg[v] == 2 and v not in covered:
            raise MalformedComponent(f"2-vertex {v} lies on no thread (cycle or pendant path)")
    threads = tuple(found[k] for k in sorted(found))
    nearby: dict[int, set[int]] = {}
    for t in threads:
        for end in t.ends:
            nearby.setdefault(end, set()).update(t.interior)
        for x in t.interior:
            nearby.setdefault(x, set()).update(t.ends)
    return ThreadInfo(threads, {v: tuple(sorted(s)) for v, s in sorted(nearby.items())})


# ---------------------------------------------------------------------------
# small utilities
# ---------------------------------------------------------------------------


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    """Hop distance from the nearest source; -1 when unreachable."""
    dist = [-1] * g.n
    q = deque()
    for s in sources:
        if dist[s] == -1:
            dist[s] = 0
            q.append(s)
    while q:
        v = q.popleft()
        for w in g.adj(v):
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``inf`` for forests."""
    best = float("inf")
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.adj(v):
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    q.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best
