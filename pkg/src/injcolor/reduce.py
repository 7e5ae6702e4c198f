"""Reducible configurations: detection, peeling and coloring extension.

A reduction removes a vertex set R from the current graph and, once the
smaller graph is colored, re-colors a set S containing R.  Every removed vertex
has at most one neighbour outside S, so no pair of untouched vertices loses a
common neighbour; the extension is then a list-coloring problem on the
neighboring graph induced by S.

For maximum degree 4 and 5 the bounded configurations are not enough.  The
auxiliary multigraph H records which vertices are joined through 2-vertices
(and, for degree 4, through adjacent 3-vertices); a component of H with
negative surplus yields an even cycle in G and the subgraph K, whose square
is re-colored with the list-coloring engine.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (BoundedConfigPresent, CaseMismatch, ExtensionImpossible, FallbackExceeded,
                     PreconditionViolated, StructureViolation)
from .graph import Coloring, Graph, PrunedSquare, hat_square, neighboring_graph, square_sets, tilde_square
from .listcolor import DEFAULT_SEARCH_CAP, degree_choosable_color, list_color_exact


class Case(enum.Enum):
    D3 = "d3"
    D4 = "d4"
    D5 = "d5"
    D6PLUS = "d6"


def case_for(delta: int) -> Case:
    if delta <= 3:
        return Case.D3
    if delta == 4:
        return Case.D4
    if delta == 5:
        return Case.D5
    return Case.D6PLUS


def case_delta(case: Case, delta: int | None = None) -> int:
    """The maximum degree a case is run with (explicit for the open-ended case)."""
    fixed = {Case.D3: 3, Case.D4: 4, Case.D5: 5}
    if case in fixed:
        return fixed[case]
    if delta is None or delta < 6:
        raise CaseMismatch(f"case d6 needs an explicit maximum degree >= 6, got {delta}")
    return delta


def palette_for(case: Case, delta: int | None = None) -> int:
    return case_delta(case, delta) + 2


@dataclass(frozen=True)
class ConfigKind:
    """A located configuration: ``vertices`` are removed, ``recolor`` re-colored."""

    tag: str
    case: Case
    vertices: tuple[int, ...]
    recolor: tuple[int, ...]
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __str__(self):
        return f"{self.tag}[{self.case.value}]{list(self.vertices)}"


@dataclass(frozen=True)
class ReductionStep:
    config: ConfigKind
    graph: Graph
    kept: tuple[int, ...]

    @property
    def removed(self) -> tuple[int, ...]:
        return self.config.vertices


# ---------------------------------------------------------------------------
# detectors
# ---------------------------------------------------------------------------


def _twos(g: Graph, v: int) -> list[int]:
    return [w for w in g.adj(v) if g.degree(w) == 2]


def _rc1(g, case, delta):
    for v in range(g.n):
        if g.degree(v) <= 1:
            return ConfigKind("RC1", case, (v,), (v,))
    return None


def _rc2(g, case, delta):
    for v in range(g.n):
        if g.degree(v) == 2:
            for w in g.adj(v):
                if g.degree(w) == 2:
                    s = tuple(sorted((v, w)))
                    return ConfigKind("RC2", case, s, s)
    return None


def _rc3(g, case, delta):
    for u in range(g.n):
        if g.degree(u) == 3:
            tw = _twos(g, u)
            if len(tw) >= 2:
                s = tuple(sorted([u] + tw))
                return ConfigKind("RC3", case, s, s)
    return None


def _adjacent_threes(tag):
    def detect(g, case, delta):
        for u1 in range(g.n):
            if g.degree(u1) != 3 or not _twos(g, u1):
                continue
            for u2 in g.adj(u1):
                if g.degree(u2) != 3 or not _twos(g, u2):
                    continue
                v1 = _twos(g, u1)[0]
                others = [w for w in _twos(g, u2) if w != v1]
                v2 = others[0] if others else v1
                s = tuple(sorted({u1, u2, v1, v2}))
                return ConfigKind(tag, case, s, s, {"pair": (u1, u2), "twos": (v1, v2)})
        return None

    return detect


def _three_with_two(predicate, tag="RC4"):
    """3-vertex u with exactly one 2-neighbour v whose other neighbours pass ``predicate``.

    Only v is removed; u is re-colored because v's removal frees the pair u, w.
    """

    def detect(g, case, delta):
        for u in range(g.n):
            if g.degree(u) != 3:
                continue
            tw = _twos(g, u)
            if len(tw) != 1:
                continue
            v = tw[0]
            x, y = [w for w in g.adj(u) if w != v]
            if predicate(g, x, y, delta):
                return ConfigKind(tag, case, (v,), tuple(sorted((u, v))), {"center": u})
        return None

    return detect


def _rc5_d6(g, case, delta):
    for u in range(g.n):
        if g.degree(u) != 4:
            continue
        tw = _twos(g, u)
        if len(tw) != 4:
            continue
        for v in tw:
            w = next(z for z in g.adj(v) if z != u)
            if g.degree(w) < delta:
                return ConfigKind("RC5", case, (v,), tuple(sorted((u, v))), {"center": u})
    return None


_DETECTORS = {
    Case.D3: (_rc1, _rc2, _rc3, _adjacent_threes("RC4")),
    Case.D4: (_rc1, _rc2, _rc3,
              _three_with_two(lambda g, x, y, d: g.degree(x) == 3 and g.degree(y) == 3),
              _adjacent_threes("RC5")),
    Case.D5: (_rc1, _rc2, _rc3,
              _three_with_two(lambda g, x, y, d: g.degree(x) + g.degree(y) <= 7)),
    Case.D6PLUS: (_rc1, _rc2, _rc3,
                  _three_with_two(lambda g, x, y, d: g.degree(x) + g.degree(y) <= d + 2),
                  _rc5_d6),
}


def find_config(g: Graph, case: Case, delta: int | None = None) -> ConfigKind | None:
    """First bounded reducible configuration (RC1 before RC2 ..., lowest id first).

    ``delta`` is the maximum degree the case is run with; it defaults to the
    graph's own for the open-ended case.  Graphs whose maximum degree fell
    below the case value during peeling are accepted.
    """
    if case is Case.D6PLUS and delta is None:
        delta = g.max_degree
    d = case_delta(case, delta)
    if g.max_degree > d:
        raise CaseMismatch(f"maximum degree {g.max_degree} exceeds {d} for case {case.value}")
    for detect in _DETECTORS[case]:
        cfg = detect(g, case, d)
        if cfg is not None:
            return cfg
    return None


# ---------------------------------------------------------------------------
# peel / extend
# ---------------------------------------------------------------------------


def peel(g: Graph, cfg: ConfigKind) -> tuple[Graph, ReductionStep]:
    removed = set(cfg.vertices)
    s = set(cfg.recolor)
    if not removed <= s:
        raise ValueError("removed vertices must be re-colored")
    for v in removed:
        if sum(1 for w in g.adj(v) if w not in s) > 1:
            raise ValueError(f"vertex {v} of {cfg} has two neighbours outside the re-colored set")
    kept = tuple(v for v in range(g.n) if v not in removed)
    return g.induced(kept), ReductionStep(cfg, g, kept)


def _lift(step: ReductionStep, partial: Coloring) -> list[int]:
    if len(partial) != len(step.kept):
        raise ValueError("partial coloring does not match the peeled graph")
    col = [0] * step.graph.n
    for i, v in enumerate(step.kept):
        col[v] = partial[i]
    return col


def _square_nbrs(g: Graph, v: int) -> set[int]:
    return {w for x in g.adj(v) for w in g.adj(x) if w != v}


def extend(g: Graph, step: ReductionStep, partial: Coloring, palette: int) -> Coloring:
    """Color ``g`` from a coloring of the graph left after ``step``."""
    col = _lift(step, partial)
    cfg = step.config
    if cfg.tag == "KSubgraph":
        return color_via_K(g, cfg.meta["plan"], Coloring(col, palette), cfg.case, palette)
    s = list(cfg.recolor)
    for v in s:
        col[v] = 0
    index = {v: i for i, v in enumerate(s)}
    lists = []
    edges = set()
    for v in s:
        sq = _square_nbrs(g, v)
        lists.append(set(range(1, palette + 1)) - {col[w] for w in sq if col[w]})
        for w in sq:
            if w in index and index[w] > index[v]:
                edges.add((index[v], index[w]))
    res = list_color_exact(Graph(len(s), sorted(edges)), lists)
    if res is None:
        raise ExtensionImpossible(f"{cfg} cannot be re-colored with {palette} colors")
    for v, c in zip(s, res.colors):
        col[v] = c
    return Coloring(col, palette)


# ---------------------------------------------------------------------------
# auxiliary graph H
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HEdge:
    a: int
    b: int
    rule: str  # "H1" (through a 2-vertex) or "H2" (a G-edge between 3-vertices)
    via: tuple[int, ...]  # the 2-vertex, or the G-edge endpoints


@dataclass
class AuxGraph:
    """Multigraph H.  Node i stands for G-vertex ``nodes[i][0]``; a split copy
    carries the id of its only edge in ``nodes[i][1]``."""

    case: Case
    nodes: list[tuple[int, int | None]]
    edges: list[HEdge]
    incident: list[list[int]]
    split: tuple[int, ...] = ()

    def degree(self, i: int) -> int:
        return len(self.incident[i])

    def origin(self, i: int) -> int:
        return self.nodes[i][0]

    def other(self, e: int, i: int) -> int:
        ed = self.edges[e]
        return ed.b if ed.a == i else ed.a

    def node_of(self, v: int) -> int | None:
        for i, (o, tag) in enumerate(self.nodes):
            if o == v and tag is None:
                return i
        return None

    def components(self) -> list[list[int]]:
        seen = [False] * len(self.nodes)
        out = []
        for s in range(len(self.nodes)):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            q = deque([s])
            while q:
                i = q.popleft()
                for e in self.incident[i]:
                    j = self.other(e, i)
                    if not seen[j]:
                        seen[j] = True
                        comp.append(j)
                        q.append(j)
            out.append(sorted(comp))
        return out

    def lift(self, e: int, start: int) -> list[int]:
        """G-walk realizing edge ``e`` traversed from node ``start``."""
        ed = self.edges[e]
        a, b = self.origin(start), self.origin(self.other(e, start))
        if ed.rule == "H1":
            return [a, ed.via[0], b]
        return [a, b]


def pruned_square(g: Graph, case: Case) -> PrunedSquare:
    if case is Case.D4:
        return hat_square(g)
    if case is Case.D5:
        return tilde_square(g)
    raise ValueError(f"no pruned square for case {case.value}")


def build_aux_H(g: Graph, case: Case) -> AuxGraph:
    if case not in (Case.D4, Case.D5):
        raise ValueError("H is defined for cases d4 and d5 only")
    cfg = find_config(g, case)
    if cfg is not None:
        raise BoundedConfigPresent(cfg)
    ps = pruned_square(g, case)
    raw: list[tuple[int, int, str, tuple[int, ...]]] = []
    for w in range(g.n):
        if g.degree(w) != 2:
            continue
        v1, v2 = g.adj(w)
        if case is Case.D4 or g.degree(v1) == 4 or g.degree(v2) == 4:
            raw.append((v1, v2, "H1", (w,)))
    if case is Case.D4:
        pairs = set()
        for a in range(g.n):
            if g.degree(a) == 3 and _twos(g, a):
                for b in g.adj(a):
                    if g.degree(b) == 3:
                        pairs.add((min(a, b), max(a, b)))
        for a, b in sorted(pairs):
            raw.append((a, b, "H2", (a, b)))
    hdeg: dict[int, int] = {}
    for a, b, _, _ in raw:
        hdeg[a] = hdeg.get(a, 0) + 1
        hdeg[b] = hdeg.get(b, 0) + 1
    threshold = 7 if case is Case.D4 else 8
    # splitting a node of H-degree 1 leaves H unchanged, so only larger ones count
    split = sorted(v for v in hdeg if hdeg[v] >= 2 and v in ps.adj and ps.degree(v) >= threshold)
    if case is Case.D4:
        for v in split:
            if g.degree(v) != 4 or hdeg[v] != 2:
                raise StructureViolation(
                    f"vertex {v} qualifies for splitting with degree {g.degree(v)} and H-degree {hdeg[v]}")
    split_set = set(split)
    keys = []
    for v in hdeg:
        if v not in split_set:
            keys.append((v, None))
    for e, (a, b, _, _) in enumerate(raw):
        for v in (a, b):
            if v in split_set:
                keys.append((v, e))
    keys.sort(key=lambda k: (k[0], -1 if k[1] is None else k[1]))
    index = {k: i for i, k in enumerate(keys)}

    def node(v, e):
        return index[(v, e)] if v in split_set else index[(v, None)]

    edges = []
    incident: list[list[int]] = [[] for _ in keys]
    for e, (a, b, rule, via) in enumerate(raw):
        i, j = node(a, e), node(b, e)
        edges.append(HEdge(i, j, rule, via))
        incident[i].append(e)
        incident[j].append(e)
    return AuxGraph(case, keys, edges, incident, tuple(split))


def special_kind(g: Graph, v: int) -> str | None:
    """'2222' or '2223' for 4-vertices with four 2-neighbours, or three and a 3-neighbour."""
    if g.degree(v) != 4:
        return None
    ds = sorted(g.degree(w) for w in g.adj(v))
    if ds == [2, 2, 2, 2]:
        return "2222"
    if ds == [2, 2, 2, 3]:
        return "2223"
    return None


def component_surplus(h: AuxGraph, g: Graph) -> list[Fraction]:
    """(leaves - #V2223 - 2 #V2222) / 5 for each component of ``h.components()``."""
    out = []
    for comp in h.components():
        leaves = sum(1 for i in comp if h.degree(i) == 1)
        pen = 0
        for i in comp:
            o, tag = h.nodes[i]
            if tag is None:
                k = special_kind(g, o)
                pen += 2 if k == "2222" else 1 if k == "2223" else 0
        out.append(Fraction(leaves - pen, 5))
    return out


# ---------------------------------------------------------------------------
# subgraph K
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KSubgraphPlan:
    cycle_h: tuple[int, ...]  # H-nodes of C in cyclic order
    cycle_edges: tuple[int, ...]  # H-edge ids, edge i joins node i and i+1
    u: int
    c_prime: tuple[int, ...]  # G-vertices of C' in cyclic order
    path: tuple[int, ...]  # G-path from x to u
    x: int
    hat: int | None
    k_vertices: tuple[int, ...]
    k_edges: tuple[tuple[int, int], ...]
    first: tuple[int, ...]
    second: tuple[int, ...]
    x_u_even: bool

    @property
    def u_on_cycle(self) -> bool:
        return self.u in self.c_prime


def _canonical_cycle(nodes: Sequence[int]) -> tuple[int, ...]:
    k = len(nodes)
    best = None
    for seq in (list(nodes), list(reversed(nodes))):
        for r in range(k):
            cand = tuple(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    return best


def _shortest_cycle(h: AuxGraph, comp: Sequence[int]):
    inside = set(comp)
    best = None
    for e in sorted({e for i in comp for e in h.incident[i]}):
        a, b = h.edges[e].a, h.edges[e].b
        if a not in inside:
            continue
        parent = {a: None}
        q = deque([a])
        while q and b not in parent:
            i = q.popleft()
            for f in sorted(h.incident[i], key=lambda f: (h.other(f, i), f)):
                if f == e:
                    continue
                j = h.other(f, i)
                if j not in parent:
                    parent[j] = (i, f)
                    q.append(j)
        if b not in parent:
            continue
        nodes, edges = [b], []
        while parent[nodes[-1]] is not None:
            i, f = parent[nodes[-1]]
            edges.append(f)
            nodes.append(i)
        nodes.reverse()
        edges.reverse()
        # nodes run a..b, edges[i] joins nodes[i], nodes[i+1]; e closes b..a
        edges.append(e)
        key = (len(nodes), _canonical_cycle(nodes), tuple(sorted(edges)))
        if best is None or key < best[0]:
            best = (key, tuple(nodes), tuple(edges))
    if best is None:
        raise StructureViolation("component of H has no cycle")
    return best[1], best[2]


def _h_path(h: AuxGraph, sources: Sequence[int], target: int) -> tuple[list[int], list[int]]:
    parent = {s: None for s in sources}
    q = deque(sorted(sources))
    while q and target not in parent:
        i = q.popleft()
        for f in sorted(h.incident[i], key=lambda f: (h.other(f, i), f)):
            j = h.other(f, i)
            if j not in parent:
                parent[j] = (i, f)
                q.append(j)
    if target not in parent:
        raise StructureViolation("special vertex is not connected to the cycle in H")
    nodes, edges = [target], []
    while parent[nodes[-1]] is not None:
        i, f = parent[nodes[-1]]
        edges.append(f)
        nodes.append(i)
    nodes.reverse()
    edges.reverse()
    return nodes, edges


def _walk(h: AuxGraph, nodes: Sequence[int], edges: Sequence[int]) -> list[int]:
    out = [h.origin(nodes[0])]
    for i, e in enumerate(edges):
        out.extend(h.lift(e, nodes[i])[1:])
    return out


def plan_k_subgraph(g: Graph, h: AuxGraph, J: Sequence[int]) -> KSubgraphPlan:
    """Locate C, u, C', K and the two components of K's neighboring graph."""
    cyc_nodes, cyc_edges = _shortest_cycle(h, J)
    k = len(cyc_nodes)
    if h.case is Case.D4:
        rules = [h.edges[e].rule for e in cyc_edges]
        if all(r == "H2" for r in rules):
            raise StructureViolation("cycle of H built from H2 edges only")
        start = rules.index("H1")
        run = 0
        for r in rules[start:] + rules[:start] + ["H1"]:
            if r == "H2":
                run += 1
            else:
                if run not in (0, 2):
                    raise StructureViolation(f"run of {run} successive H2 edges on C'")
                run = 0
    closed = list(cyc_nodes) + [cyc_nodes[0]]
    walk = _walk(h, closed, cyc_edges)
    c_prime = walk[:-1]
    if len(set(c_prime)) != len(c_prime):
        raise StructureViolation(f"lifted cycle {c_prime} is not simple")
    for i, v in enumerate(c_prime):
        if not g.has_edge(v, c_prime[(i + 1) % len(c_prime)]):
            raise StructureViolation("lifted cycle uses a missing edge")
    if len(c_prime) % 2:
        raise StructureViolation(f"C' has odd length {len(c_prime)}")

    dist = {i: 0 for i in cyc_nodes}
    q = deque(cyc_nodes)
    while q:
        i = q.popleft()
        for f in h.incident[i]:
            j = h.other(f, i)
            if j not in dist:
                dist[j] = dist[i] + 1
                q.append(j)
    specials = [i for i in J if h.nodes[i][1] is None and special_kind(g, h.origin(i))]
    if not specials:
        raise StructureViolation("component has no special vertex")
    un = min(specials, key=lambda i: (dist.get(i, 1 << 30), h.origin(i)))
    u = h.origin(un)

    cp_set = set(c_prime)
    k_edges = {(min(a, b), max(a, b)) for a, b in zip(c_prime, c_prime[1:] + c_prime[:1])}
    hat = None
    if u in cp_set:
        path = [u]
        free = [w for w in _twos(g, u) if w not in cp_set]
        if not free:
            raise StructureViolation(f"special vertex {u} has no 2-neighbour off C'")
        hat = free[0]
        k_edges.add((min(u, hat), max(u, hat)))
    else:
        pn, pe = _h_path(h, list(cyc_nodes), un)
        path = _walk(h, pn, pe)
        if set(path[1:]) & cp_set:
            raise StructureViolation("path to the special vertex re-enters C'")
        for a, b in zip(path, path[1:]):
            k_edges.add((min(a, b), max(a, b)))
    x = path[0]
    kv = sorted(cp_set | set(path) | ({hat} if hat is not None else set()))
    loc = {v: i for i, v in enumerate(kv)}
    kg = Graph(len(kv), [(loc[a], loc[b]) for a, b in sorted(k_edges)])
    comps = [[kv[i] for i in c] for c in neighboring_graph(kg).components()]
    first = next(c for c in comps if u in c)
    rest = [c for c in comps if c is not first]
    if len(rest) != 1:
        raise StructureViolation(f"K^(2) has {len(comps)} components")
    return KSubgraphPlan(tuple(cyc_nodes), tuple(cyc_edges), u, tuple(c_prime), tuple(path), x, hat,
                         tuple(kv), tuple(sorted(k_edges)), tuple(first), tuple(rest[0]),
                         (len(path) - 1) % 2 == 0)


def n2(g: Graph, u: int) -> tuple[int, ...]:
    """u together with its adjacent 2-vertices."""
    return tuple(sorted([u] + _twos(g, u)))


def k_reduction(g: Graph, case: Case) -> ConfigKind | None:
    """The K-subgraph configuration of the first H-component with negative surplus."""
    h = build_aux_H(g, case)
    for comp, s in zip(h.components(), component_surplus(h, g)):
        if s < 0:
            plan = plan_k_subgraph(g, h, comp)
            return ConfigKind("KSubgraph", case, n2(g, plan.u), tuple(range(g.n)),
                              {"plan": plan, "surplus": s})
    return None


def find_reduction(g: Graph, case: Case, delta: int | None = None) -> ConfigKind | None:
    cfg = find_config(g, case, delta)
    if cfg is None and case in (Case.D4, Case.D5):
        cfg = k_reduction(g, case)
    return cfg


def color_via_K(g: Graph, plan: KSubgraphPlan, partial: Coloring, case: Case,
                palette: int | None = None, cap: int = DEFAULT_SEARCH_CAP) -> Coloring:
    """Extend a coloring of g - N_2[u] (zeros on N_2[u]) to all of g.

    Works in the pruned neighboring graph: K and N_2[u] are uncolored, each
    component of what is uncolored is list-colored (spare color, block or
    Brooks arguments, search as a last resort), and the pruned vertices are
    colored greedily at the end.
    """
    if palette is None:
        palette = palette_for(case)
    ps = pruned_square(g, case)
    col = list(partial.colors)
    if len(col) != g.n:
        raise ValueError("partial coloring has the wrong length")
    for v in ps.deleted:
        col[v] = 0
    hole = set(n2(g, plan.u))
    for v in ps.adj:
        if not col[v] and v not in hole:
            raise PreconditionViolated(v, "uncolored outside N_2[u]")
    U = (set(plan.k_vertices) | hole) & set(ps.adj)
    for v in U:
        col[v] = 0
    full = set(range(1, palette + 1))
    seen: set[int] = set()
    for s in sorted(U):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        q = deque([s])
        while q:
            v = q.popleft()
            for w in ps.adj[v]:
                if w in U and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    q.append(w)
        comp.sort()
        loc = {v: i for i, v in enumerate(comp)}
        cg = Graph(len(comp), [(loc[v], loc[w]) for v in comp for w in ps.adj[v] if w in loc and loc[w] > loc[v]])
        lists = [full - {col[w] for w in ps.adj[v] if col[w]} for v in comp]
        try:
            res = degree_choosable_color(cg, lists, cap=cap)
        except PreconditionViolated:
            res = list_color_exact(cg, lists) if cg.n <= cap else None
        except FallbackExceeded as exc:
            raise ExtensionImpossible(str(exc)) from exc
        if res is None:
            raise ExtensionImpossible(f"component {comp} of the K region has no list coloring")
        for v, c in zip(comp, res.colors):
            col[v] = c
    sq = square_sets(g)
    for v in ps.deleted:
        free = sorted(full - {col[w] for w in sq[v] if col[w]})
        if not free:
            raise ExtensionImpossible(f"pruned vertex {v} has no free color")
        col[v] = free[0]
    return Coloring(col, palette)
