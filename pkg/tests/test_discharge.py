from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from injcolor import gen
from injcolor.discharge import (BANK, average_degree_certificate, discharge_lemma6, discharge_thm2,
                                discharge_two_phase)
from injcolor.errors import CaseMismatch, ConfigPresent
from injcolor.reduce import Case, build_aux_H, component_surplus

B3, B = F(36, 13), F(14, 5)


def degs(g, v):
    return sorted(g.degree(w) for w in g.adj(v))


def test_fano_minus_vertex_charges_are_tight():
    g = gen.fano_minus_vertex()
    led = discharge_thm2(g)
    assert set(led.final) == {B3}
    assert led.conserved() and average_degree_certificate(led, B3)
    for v in range(g.n):
        if g.degree(v) == 2:
            got = sorted(a for r, _, w, a in led.log if w == v)
            assert got == [F(1, 13)] * 4 + [F(3, 13)] * 2


def test_heawood_charges_untouched():
    led = discharge_thm2(gen.heawood())
    assert led.log == [] and set(led.final) == {F(3)}
    assert average_degree_certificate(led, B3)


def test_certificate_rejects_deficit():
    led = discharge_thm2(gen.heawood())
    assert not average_degree_certificate(led, F(4))


def test_thm2_preconditions():
    with pytest.raises(ConfigPresent):
        discharge_thm2(gen.path(4))
    with pytest.raises(CaseMismatch):
        discharge_thm2(gen.complete(5))


def test_thm2_on_rc_free_corpus():
    four_cycle = 0
    for _, g in gen.rc_free_corpus(3, 40, seed=0):
        led = discharge_thm2(g)
        assert led.conserved() and led.min_final() >= B3
        assert all(a > 0 for *_, a in led.log)
        four_cycle += any(r == "R2" and a == F(2, 13) for r, _, _, a in led.log)
        for v in range(g.n):
            if g.degree(v) == 3 and degs(g, v).count(2) == 1:
                given_adj = sum(a for r, d, _, a in led.log if d == v and r == "R1")
                assert given_adj == F(3, 13)
    assert four_cycle


@pytest.mark.parametrize("delta", [6, 7])
def test_high_degree_rules_on_rc_free_corpus(delta):
    for _, g in gen.rc_free_corpus(delta, 30, seed=0):
        led = discharge_lemma6(g)
        assert led.conserved() and led.min_final() >= B
        mid = led.snapshots["R1+R2"]
        for v in range(g.n):
            if g.degree(v) == 2:
                assert mid[v] == B
            if g.degree(v) >= 5:
                assert mid[v] >= F(3, 5) * g.degree(v) >= 3
            if g.degree(v) == 4 and degs(g, v) == [2, 2, 2, 2] and delta == 6:
                assert led.final[v] >= 4 - 4 * F(2, 5) + 4 * (F(3, 5) - F(14, 30))


def test_high_degree_rules_preconditions():
    with pytest.raises(CaseMismatch):
        discharge_lemma6(gen.heawood())


def test_two_phase_d4():
    seen_3, seen_2222 = 0, 0
    for _, g in gen.rc_free_corpus(4, 40, seed=0):
        h = build_aux_H(g, Case.D4)
        led = discharge_two_phase(g, h, Case.D4)
        assert led.conserved()
        assert led.bank == sum(component_surplus(h, g), F(0))
        p1 = led.snapshots["phase1"]
        for v in range(g.n):
            d = degs(g, v)
            if g.degree(v) == 3 and d.count(2) == 1 and d.count(4) == 1:
                assert p1[v] == 3 - F(2, 5) + F(1, 5)
                seen_3 += 1
            if d == [2, 2, 2, 2] and g.degree(v) == 4:
                assert p1[v] == F(12, 5) and led.final[v] == p1[v] + F(2, 5)
                seen_2222 += 1
        if all(s >= 0 for s in led.surplus):
            assert led.min_final() >= B
    assert seen_3 and seen_2222


def test_two_phase_d5():
    seen = 0
    for _, g in gen.rc_free_corpus(5, 40, seed=0):
        led = discharge_two_phase(g, None, Case.D5)
        assert led.conserved()
        for v in range(g.n):
            if g.degree(v) == 5 and degs(g, v).count(2) == 4:
                seen += 1
                if all(s >= 0 for s in led.surplus):
                    assert led.final[v] >= B
        if all(s >= 0 for s in led.surplus):
            assert led.min_final() >= B
            assert average_degree_certificate(led, B)
    assert seen


def test_bank_only_in_two_phase():
    for _, g in gen.rc_free_corpus(4, 10, seed=3):
        led = discharge_two_phase(g, None, Case.D4)
        flows = [a for r, d, w, a in led.log if BANK in (d, w)]
        assert all(r.startswith("R2") for r, d, w, a in led.log if BANK in (d, w))
        assert flows or led.bank == 0


@pytest.mark.parametrize("delta", [3, 4, 5, 6])
def test_order_independence(delta):
    rng = random.Random(delta)
    for _, g in gen.rc_free_corpus(delta, 10, seed=4):
        order = list(range(g.n))
        rng.shuffle(order)
        if delta == 3:
            a, b = discharge_thm2(g), discharge_thm2(g, order)
        elif delta == 6:
            a, b = discharge_lemma6(g), discharge_lemma6(g, order=order)
        else:
            case = Case.D4 if delta == 4 else Case.D5
            a, b = discharge_two_phase(g, None, case), discharge_two_phase(g, None, case, order)
        assert a.final == b.final and a.bank == b.bank
        assert sorted(a.log, key=str) == sorted(b.log, key=str)


def test_certified_graphs_are_dense():
    # a passing certificate means average degree >= bound, so such graphs never
    # satisfy the hypothesis
    from injcolor.density import mad_exact
    for delta, bound in ((3, B3), (4, B), (5, B), (6, B)):
        for _, g in gen.rc_free_corpus(delta, 15, seed=5):
            if delta == 3:
                led = discharge_thm2(g)
            elif delta == 6:
                led = discharge_lemma6(g)
            else:
                led = discharge_two_phase(g, None, Case.D4 if delta == 4 else Case.D5)
            if average_degree_certificate(led, bound):
                assert F(2 * g.m, g.n) >= bound and mad_exact(g).density >= bound
