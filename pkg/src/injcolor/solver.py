"""Injective coloring by repeated reduction.

Each connected component is handled on its own.  Components of maximum degree
at most 2 are colored exactly; the others are peeled configuration by
configuration down to the empty graph (an explicit stack, no recursion) and the
coloring is rebuilt in reverse order with Delta + 2 colors.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .density import mad_exact
from .errors import ExtensionImpossible, HypothesisViolated, Stalled, StructureViolation
from .graph import Coloring, Graph, neighboring_graph, verify_injective
from .listcolor import chi_exact
from .reduce import Case, ReductionStep, case_for, extend, find_reduction, palette_for, peel

BOUND_DELTA3 = Fraction(36, 13)
BOUND_GENERAL = Fraction(14, 5)
FALLBACK_LIMIT = 24


def hypothesis_bound(delta: int) -> Fraction | None:
    if delta <= 2:
        return None
    return BOUND_DELTA3 if delta == 3 else BOUND_GENERAL


@dataclass
class ComponentReport:
    vertices: tuple[int, ...]
    delta: int
    palette: int
    mad: Fraction | None
    method: str  # "exact" | "reduction" | "fallback"
    trace: list[str] = field(default_factory=list)


@dataclass
class Report:
    palette: int
    colors_used: int
    delta: int
    components: list[ComponentReport]
    seconds: float

    @property
    def trace(self) -> list[str]:
        return [t for c in self.components for t in c.trace]

    @property
    def mad(self) -> Fraction | None:
        vals = [c.mad for c in self.components if c.mad is not None]
        return max(vals) if vals else None


def _peel_all(g: Graph, case: Case, delta: int) -> list[ReductionStep]:
    steps = []
    cur = g
    while cur.n:
        cfg = find_reduction(cur, case, delta)
        if cfg is None:
            raise Stalled(f"no reduction applies to a {cur.n}-vertex remainder ({case.value})")
        cur, step = peel(cur, cfg)
        steps.append(step)
    return steps


def _rebuild(steps: list[ReductionStep], palette: int) -> Coloring:
    col = Coloring((), palette)
    for step in reversed(steps):
        col = extend(step.graph, step, col, palette)
    return col


def _exact(g: Graph, ub: int) -> Coloring:
    res = chi_exact(neighboring_graph(g), max(1, ub))
    if res is None:
        raise Stalled(f"no injective coloring with {ub} colors")
    return res[1]


def _color_component(sub: Graph, mode: str) -> tuple[Coloring, ComponentReport]:
    delta = sub.max_degree
    verts = tuple(sub.labels)
    if delta <= 2:
        col = _exact(sub, sub.n)
        return col, ComponentReport(verts, delta, col.palette, None, "exact")
    bound = hypothesis_bound(delta)
    mad = mad_exact(sub).density
    if mode == "strict" and mad >= bound:
        raise HypothesisViolated(mad, bound, verts)
    case = case_for(delta)
    palette = palette_for(case, delta)
    try:
        steps = _peel_all(sub, case, delta)
        col = _rebuild(steps, palette)
        trace = [str(s.config) for s in steps]
        method = "reduction"
    except (Stalled, ExtensionImpossible, StructureViolation):
        if mode == "strict":
            raise
        if sub.n > FALLBACK_LIMIT:
            raise Stalled(f"reduction stalled on a component of {sub.n} vertices (fallback limit {FALLBACK_LIMIT})")
        col = _exact(sub, sub.n)
        trace, method = [], "fallback"
        palette = col.palette
    return col, ComponentReport(verts, delta, palette, mad, method, trace)


def color_injective(g: Graph, mode: str = "strict") -> tuple[Coloring, Report]:
    """Injective coloring with at most Delta + 2 colors per component.

    ``strict`` refuses components whose maximum average degree reaches the
    bound for their maximum degree; ``force`` skips that check and falls back
    to exact search on small components where the reductions run out.
    """
    if mode not in ("strict", "force"):
        raise ValueError(f"unknown mode {mode!r}")
    t0 = time.perf_counter()
    colors = [0] * g.n
    reports = []
    for comp in g.components():
        sub = g.induced(comp)
        # relabel so the component report names vertices of g
        sub = Graph.from_sets([sub.adj(i) for i in range(sub.n)], comp)
        col, rep = _color_component(sub, mode)
        for i, v in enumerate(comp):
            colors[v] = col[i]
        reports.append(rep)
    palette = max([r.palette for r in reports] + [1])
    out = Coloring(colors, palette)
    if g.n:
        bad = verify_injective(g, out)
        if bad is not None:
            raise ExtensionImpossible(f"assembled coloring violates {bad}")
    report = Report(palette, out.used, g.max_degree if g.n else 0, reports, time.perf_counter() - t0)
    return out, report


def reduction_trace(g: Graph) -> list[ReductionStep]:
    """The peel sequence of the whole graph (rules chosen by its maximum degree)."""
    if g.n == 0:
        return []
    delta = max(3, g.max_degree)
    return _peel_all(g, case_for(delta), delta)
