"""Discharging ledgers.

Every vertex starts with charge d(v).  The rule systems below move charge
between vertices (and, for maximum degree 4 and 5, through a bank) and record
each transfer.  Amounts depend only on the graph and on named snapshots of the
charges, never on the order in which donors are visited; ``order`` lets tests
check that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Iterable, Sequence

from .errors import CaseMismatch, ConfigPresent, DeficitFound
from .graph import Graph
from .reduce import AuxGraph, Case, build_aux_H, component_surplus, find_config, special_kind

BANK = "bank"


@dataclass
class ChargeLedger:
    initial: tuple[Fraction, ...]
    final: tuple[Fraction, ...]
    bank: Fraction
    log: list[tuple[str, object, object, Fraction]]
    snapshots: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)
    surplus: tuple[Fraction, ...] = ()

    def conserved(self) -> bool:
        return sum(self.final, Fraction(0)) + self.bank == sum(self.initial, Fraction(0))

    def min_final(self) -> Fraction | None:
        return min(self.final) if self.final else None


class _Book:
    def __init__(self, g: Graph):
        self.charge = [Fraction(g.degree(v)) for v in range(g.n)]
        self.initial = tuple(self.charge)
        self.bank = Fraction(0)
        self.log: list[tuple[str, object, object, Fraction]] = []
        self.snapshots: dict[str, tuple[Fraction, ...]] = {}

    def give(self, rule: str, donor, recipient, amount: Fraction):
        if amount <= 0:
            raise ValueError(f"{rule}: non-positive transfer {amount}")
        if donor == BANK:
            self.bank -= amount
        else:
            self.charge[donor] -= amount
        if recipient == BANK:
            self.bank += amount
        else:
            self.charge[recipient] += amount
        self.log.append((rule, donor, recipient, amount))

    def snap(self, name: str):
        self.snapshots[name] = tuple(self.charge)

    def ledger(self, surplus=()) -> ChargeLedger:
        return ChargeLedger(self.initial, tuple(self.charge), self.bank, self.log, self.snapshots, tuple(surplus))


def _order(g: Graph, order: Iterable[int] | None) -> list[int]:
    if order is None:
        return list(range(g.n))
    out = list(order)
    if sorted(out) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    return out


def _check_bound(book: _Book, bound: Fraction):
    for v, c in enumerate(book.charge):
        if c < bound:
            raise DeficitFound(v, c, bound)


def discharge_thm2(g: Graph, order: Sequence[int] | None = None) -> ChargeLedger:
    """Rules with 3/13 to adjacent and 1/13 (2/13 on a 4-cycle) to distance-2 2-vertices."""
    if g.n and g.max_degree > 3:
        raise CaseMismatch(f"maximum degree {g.max_degree} is not 3")
    cfg = find_config(g, Case.D3)
    if cfg is not None:
        raise ConfigPresent(cfg)
    book = _Book(g)
    vs = _order(g, order)
    for v in vs:
        if g.degree(v) == 3:
            for w in g.adj(v):
                if g.degree(w) == 2:
                    book.give("R1", v, w, Fraction(3, 13))
    for v in vs:
        if g.degree(v) != 3:
            continue
        near = g.nbr_set(v)
        common: dict[int, int] = {}
        for x in g.adj(v):
            for w in g.adj(x):
                if w != v and w not in near and g.degree(w) == 2:
                    common[w] = common.get(w, 0) + 1
        for w in sorted(common):
            # two common neighbours = the pair lies on a 4-cycle
            book.give("R2", v, w, Fraction(common[w], 13))
    _check_bound(book, Fraction(36, 13))
    return book.ledger()


def discharge_lemma6(g: Graph, delta: int | None = None, order: Sequence[int] | None = None) -> ChargeLedger:
    """Rules for maximum degree at least 6 (bound 14/5)."""
    delta = g.max_degree if delta is None else delta
    if delta < 6 or g.max_degree > delta:
        raise CaseMismatch(f"maximum degree {g.max_degree} (case {delta}) is not >= 6")
    cfg = find_config(g, Case.D6PLUS, delta)
    if cfg is not None:
        raise ConfigPresent(cfg)
    book = _Book(g)
    vs = _order(g, order)
    big = ceil(Fraction(delta + 3, 2))
    for v in vs:
        if g.degree(v) >= 3:
            for w in g.adj(v):
                if g.degree(w) == 2:
                    book.give("R1", v, w, Fraction(2, 5))
    for v in vs:
        if g.degree(v) >= big:
            for w in g.adj(v):
                if g.degree(w) in (3, 4):
                    book.give("R2", v, w, Fraction(2, 5))
    book.snap("R1+R2")
    mid = book.snapshots["R1+R2"]
    for v in vs:
        if g.degree(v) < 4:
            continue
        twos = [w for w in g.adj(v) if g.degree(w) == 2]
        excess = mid[v] - Fraction(14, 5)
        if twos and excess > 0:
            share = excess / len(twos)
            for u in twos:
                other = next(z for z in g.adj(u) if z != v)
                book.give("R3", v, other, share)
    _check_bound(book, Fraction(14, 5))
    return book.ledger()


def discharge_two_phase(g: Graph, h: AuxGraph | None = None, case: Case = Case.D4,
                        order: Sequence[int] | None = None) -> ChargeLedger:
    """Two-phase rules with a bank (maximum degree 4 or 5, bound 14/5).

    A deficit is reported only when every component of H has nonnegative
    surplus; otherwise the negative component is the reducible structure.
    """
    if case not in (Case.D4, Case.D5):
        raise CaseMismatch("two-phase discharging is defined for cases d4 and d5")
    if h is None:
        h = build_aux_H(g, case)  # raises BoundedConfigPresent
    else:
        cfg = find_config(g, case)
        if cfg is not None:
            raise ConfigPresent(cfg)
    book = _Book(g)
    vs = _order(g, order)
    deg = g.degree

    def twos(v):
        return [w for w in g.adj(v) if deg(w) == 2]

    for v in vs:
        if deg(v) >= 3:
            for w in twos(v):
                book.give("R1.1", v, w, Fraction(2, 5))
    for v in vs:
        if deg(v) != 4:
            continue
        for u in g.adj(v):
            if deg(u) != 3 or not twos(u):
                continue
            if case is Case.D4 or sum(1 for z in g.adj(u) if deg(z) == 4) == 2:
                book.give("R1.2", v, u, Fraction(1, 5))
    if case is Case.D5:
        for v in vs:
            if deg(v) != 5:
                continue
            for u in g.adj(v):
                if deg(u) == 3 and twos(u):
                    book.give("R1.3", v, u, Fraction(2, 5))
                elif deg(u) == 4:
                    book.give("R1.3", v, u, Fraction(1, 5))
    book.snap("phase1")
    rank = {v: i for i, v in enumerate(vs)}
    nodes = sorted(range(len(h.nodes)), key=lambda i: (rank[h.origin(i)], i))
    for i in nodes:
        if h.degree(i) == 1:
            book.give("R2.1", h.origin(i), BANK, Fraction(1, 5))
    for i in nodes:
        o, tag = h.nodes[i]
        if tag is not None:
            continue
        kind = special_kind(g, o)
        if kind == "2223":
            book.give("R2.2", BANK, o, Fraction(1, 5))
        elif kind == "2222":
            book.give("R2.3", BANK, o, Fraction(2, 5))
    if case is Case.D5:
        book.snap("R2.1-R2.3")
        mid = book.snapshots["R2.1-R2.3"]
        for v in vs:
            if deg(v) != 4 or mid[v] < 3:
                continue
            targets = sorted({z for w in twos(v) for z in g.adj(w) if z != v and deg(z) == 5})
            for z in targets:
                book.give("R2.4", v, z, Fraction(1, 15))
    surplus = component_surplus(h, g)
    if all(s >= 0 for s in surplus):
        _check_bound(book, Fraction(14, 5))
    return book.ledger(surplus)


def average_degree_certificate(ledger: ChargeLedger, bound) -> bool:
    """True when conservation holds, the bank is not in debt and every final
    charge reaches ``bound``; then the average degree is at least ``bound``."""
    if not ledger.conserved():
        return False
    if ledger.bank < 0:
        return False
    return all(c >= Fraction(bound) for c in ledger.final)


def discharge(g: Graph, case: Case, delta: int | None = None) -> ChargeLedger:
    if case is Case.D3:
        return discharge_thm2(g)
    if case is Case.D6PLUS:
        return discharge_lemma6(g, delta)
    return discharge_two_phase(g, None, case)
