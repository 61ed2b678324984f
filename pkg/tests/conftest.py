from __future__ import annotations

import hypothesis.strategies as st

from graphfold import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9):
    """Random simple graph: size first, then one boolean per vertex pair."""
    n = draw(st.integers(min_n, max_n))
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if draw(st.booleans())
    ]
    return Graph(n, edges)


@st.composite
def graphs_with_permutation(draw, min_n: int = 1, max_n: int = 9):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)
