from __future__ import annotations

import random

from hypothesis import strategies as st

from injcolor.graph import Graph


@st.composite
def graphs(draw, max_n=10, min_n=1):
    """Random simple graphs on ``min_n..max_n`` vertices."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


def random_graph(n, p, rng: random.Random) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
