from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from injcolor import gen
from injcolor.errors import DuplicateEdge, MalformedComponent, SelfLoop, UncoloredVertex
from injcolor.graph import (Coloring, Graph, blocks, girth, neighboring_graph, pruned_square_hat,
                            pruned_square_tilde, threads_and_nearby, verify_injective)


def edge_set(g):
    return set(g.edges())


def test_rejects_loops_and_parallel_edges():
    with pytest.raises(SelfLoop):
        Graph(2, [(0, 0)])
    with pytest.raises(DuplicateEdge):
        Graph(2, [(0, 1), (1, 0)])


def test_square_of_path():
    assert edge_set(neighboring_graph(gen.path(3))) == {(0, 2)}


def test_square_of_c4_is_matching():
    assert edge_set(neighboring_graph(gen.cycle(4))) == {(0, 2), (1, 3)}


def test_square_of_c6_is_two_triangles():
    sq = neighboring_graph(gen.cycle(6))
    assert edge_set(sq) == {(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)}


def test_hat_on_heawood_deletes_nothing():
    g = gen.heawood()
    h, deleted = pruned_square_hat(g)
    assert deleted == ()
    assert edge_set(h) == edge_set(neighboring_graph(g))


def test_hat_on_p5_deletes_interior():
    _, deleted = pruned_square_hat(gen.path(5))
    assert deleted == (1, 2, 3)


def test_hat_and_tilde_on_c8_are_empty():
    for fn in (pruned_square_hat, pruned_square_tilde):
        h, deleted = fn(gen.cycle(8))
        assert h.n == 0 and deleted == tuple(range(8))


def test_tilde_on_star_is_empty():
    h, deleted = pruned_square_tilde(gen.star(5))
    assert h.n == 0 and len(deleted) == 6


def test_tilde_keeps_quintic_girth5():
    g = gen.random_regular(80, 5, seed=0, min_girth=5)
    assert girth(g) >= 5
    h, deleted = pruned_square_tilde(g)
    assert deleted == () and all(d == 20 for d in h.degrees())


def test_blocks_examples():
    tri_pendant = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert [b.labels for b in blocks(tri_pendant)] == [(0, 1, 2), (2, 3)]
    assert [b.labels for b in blocks(gen.cycle(5))] == [(0, 1, 2, 3, 4)]
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert [b.labels for b in blocks(bowtie)] == [(0, 1, 2), (2, 3, 4)]


def test_verify_examples():
    c4 = gen.cycle(4)
    v = verify_injective(c4, Coloring((1, 2, 1, 2), 2))
    assert v is not None and (v.u, v.v) == (0, 2)
    assert verify_injective(c4, Coloring((1, 1, 2, 2), 2)) is None
    assert verify_injective(gen.star(3), Coloring((1, 1, 2, 3), 3)) is None
    with pytest.raises(UncoloredVertex):
        verify_injective(c4, Coloring((1, 0, 2, 2), 2))


def test_threads_examples():
    sub_tri = gen.subdivide(gen.complete(3), 1)
    # no 3+-vertices: the whole thing is a 2-vertex cycle
    with pytest.raises(MalformedComponent):
        threads_and_nearby(sub_tri)
    theta = Graph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    info = threads_and_nearby(theta)
    assert [t.length for t in info.threads] == [1, 1, 1]
    assert threads_and_nearby(gen.complete(4)).threads == ()
    # two K4's joined by a path with two interior vertices
    k4 = [(a, b) for a, b in gen.complete(4).edges()]
    two = Graph(10, k4 + [(a + 4, b + 4) for a, b in k4] + [(0, 8), (8, 9), (9, 4)])
    info = threads_and_nearby(two)
    assert [(t.ends, t.interior) for t in info.threads] == [((0, 4), (8, 9))]
    assert info.nearby[8] == (0, 4) and info.nearby[0] == (8, 9)


@given(graphs(max_n=11))
@settings(max_examples=150, deadline=None)
def test_square_is_symmetric_and_bounded(g):
    sq = neighboring_graph(g)
    for v in range(g.n):
        assert v not in sq.nbr_set(v)
        for w in sq.adj(v):
            assert v in sq.nbr_set(w)
        assert sq.degree(v) <= sum(g.degree(u) - 1 for u in g.adj(v))


@given(graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_verify_matches_triple_enumeration(g):
    colors = [1 + (v * 7) % 3 for v in range(g.n)]
    clash = any(colors[u] == colors[v] and g.nbr_set(u) & g.nbr_set(v)
                for u, v in combinations(range(g.n), 2))
    assert (verify_injective(g, Coloring(colors, 3)) is not None) == clash


@given(graphs(max_n=12))
@settings(max_examples=150, deadline=None)
def test_blocks_partition_edges(g):
    bs = blocks(g)
    covered = [frozenset((b.labels[a], b.labels[c])) for b in bs for a, c in b.edges()]
    assert len(covered) == len(set(covered)) == g.m
    sets = [set(b.labels) for b in bs]
    for a, b in combinations(sets, 2):
        assert len(a & b) <= 1
    ref = nx.Graph(list(g.edges()))
    ref.add_nodes_from(range(g.n))
    want = sorted(tuple(sorted(c)) for c in nx.biconnected_components(ref))
    assert sorted(b.labels for b in bs if b.n > 1) == want
