from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from injcolor import gen
from injcolor.density import mad_bruteforce, mad_exact, satisfies_hypothesis, subset_density
from injcolor.errors import EmptyGraph, TooLarge
from injcolor.graph import Graph


def test_fano_minus_vertex_mad():
    g = gen.fano_minus_vertex()
    assert (g.n, g.m) == (13, 18)
    assert mad_exact(g).density == Fraction(36, 13)
    assert not satisfies_hypothesis(g, Fraction(36, 13))


@pytest.mark.parametrize("g, want", [
    (gen.cycle(8), Fraction(2)),
    (gen.complete(4), Fraction(3)),
    (gen.star(5), Fraction(5, 3)),
    (gen.path(4), Fraction(3, 2)),
])
def test_small_values(g, want):
    assert mad_exact(g).density == want
    assert mad_bruteforce(g) == want


def test_petersen_minus_vertex_oracle():
    g = gen.petersen().without([0])
    assert mad_exact(g).density == mad_bruteforce(g)


def test_hypothesis_checks():
    assert satisfies_hypothesis(gen.cycle(8), Fraction(14, 5))
    assert not satisfies_hypothesis(gen.complete(4), Fraction(14, 5))


def test_errors():
    with pytest.raises(EmptyGraph):
        mad_exact(Graph(0))
    with pytest.raises(TooLarge):
        mad_bruteforce(gen.cycle(21))


def test_edgeless():
    w = mad_exact(Graph(3))
    assert w.density == 0 and w.subset


@given(graphs(max_n=12))
@settings(max_examples=120, deadline=None)
def test_matches_bruteforce_and_witness(g):
    w = mad_exact(g)
    assert w.density == mad_bruteforce(g)
    assert subset_density(g, w.subset) == w.density
    assert w.density >= Fraction(2 * g.m, g.n)


@given(graphs(max_n=10, min_n=2))
@settings(max_examples=80, deadline=None)
def test_adding_an_edge_never_lowers_mad(g):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.nbr_set(u)]
    if not missing:
        return
    bigger = Graph(g.n, list(g.edges()) + [missing[0]])
    assert mad_exact(bigger).density >= mad_exact(g).density


def test_subdivision_lowers_mad():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(9, 0.5, rng)
        if mad_exact(g).density > 2:
            assert mad_exact(gen.subdivide(g, 1)).density < mad_exact(g).density


def test_witness_is_deterministic():
    g = gen.petersen()
    assert mad_exact(g) == mad_exact(g)
