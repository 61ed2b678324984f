"""Canonical labeling for small graphs: refinement plus within-cell search.

The canonical key of a graph is the graph6 line of its canonically relabeled
copy, so keys of two graphs are equal exactly when the graphs are isomorphic.
Vertices are first partitioned by iterated neighborhood refinement (a vertex's
color is repeatedly replaced by its color plus the multiset of neighbor
colors); the cells of the stable partition are ordered by their
isomorphism-invariant color rank.  Within that cell order, every cell-
respecting relabeling is searched (branch-and-bound on the partial adjacency
encoding) for the lexicographically least adjacency bit string.

Exhaustive-within-cells is deliberate: at the package's working sizes
(n <= 10) the worst case is fine and the code stays easy to audit.
"""

from __future__ import annotations

from typing import Sequence

from . import graph6
from .graphs import Graph, permute


def refine_colors(n: int, masks: Sequence[int]) -> list[int]:
    """Stable neighborhood-refinement colors, as invariant integer ranks."""
    colors = [m.bit_count() for m in masks]
    ncolors = len(set(colors))
    while True:
        keys = []
        for v in range(n):
            nb = masks[v]
            around = []
            while nb:
                low = nb & -nb
                nb ^= low
                around.append(colors[low.bit_length() - 1])
            around.sort()
            keys.append((colors[v], tuple(around)))
        rank = {key: i for i, key in enumerate(sorted(set(keys)))}
        colors = [rank[k] for k in keys]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _cells(n: int, colors: Sequence[int]) -> list[list[int]]:
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def canonical_order(n: int, masks: Sequence[int]) -> list[int]:
    """The relabeling order: position i of the canonical copy is vertex order[i]."""
    if n == 0:
        return []
    cells = _cells(n, refine_colors(n, masks))
    if all(len(cell) == 1 for cell in cells):
        return [cell[0] for cell in cells]

    cell_at: list[int] = []
    for ci, cell in enumerate(cells):
        cell_at.extend([ci] * len(cell))
    remaining = [list(cell) for cell in cells]
    order: list[int] = []
    # best_rows[0..pos-1] always equals the current path's rows, so comparing
    # position by position is sound at every depth; UNSET marks positions the
    # current best prefix has not been completed through yet.
    UNSET = 1 << 62
    best_rows = [UNSET] * n
    best_order: list[int] | None = None

    def search(pos: int, improved: bool) -> None:
        nonlocal best_order
        if pos == n:
            # an all-equal path reproduces the recorded encoding exactly
            if improved or best_order is None:
                best_order = order.copy()
            return
        rem = remaining[cell_at[pos]]
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        for i in range(len(rem)):
            w = rem[i]
            mw = masks[w]
            mc = mw | (1 << w)
            # twins are interchangeable by an automorphism, so only the first
            # of each twin class can contribute a new minimum at this position
            if mw in seen_open or mc in seen_closed:
                continue
            seen_open.add(mw)
            seen_closed.add(mc)
            row = 0
            for u in order:
                row = (row << 1) | (mw >> u & 1)
            if row > best_rows[pos]:
                continue
            child_improved = improved
            if row < best_rows[pos]:
                best_rows[pos] = row
                for k in range(pos + 1, n):
                    best_rows[k] = UNSET
                child_improved = True
            rem.pop(i)
            order.append(w)
            search(pos + 1, child_improved)
            order.pop()
            rem.insert(i, w)

    search(0, False)
    assert best_order is not None
    return best_order


def canonical_key(n: int, masks: Sequence[int]) -> str:
    """Canonical graph6 key of the graph given by neighbor bitmasks."""
    order = canonical_order(n, masks)
    position = [0] * n
    for pos, v in enumerate(order):
        position[v] = pos
    new_masks = [0] * n
    for v in range(n):
        pv = position[v]
        nb = masks[v]
        acc = 0
        while nb:
            low = nb & -nb
            nb ^= low
            acc |= 1 << position[low.bit_length() - 1]
        new_masks[pv] = acc
    return graph6.encode(Graph.from_masks(new_masks))


def canonical_form(g: Graph) -> str:
    """Relabeling-invariant key: equal keys iff isomorphic graphs (n <= 10)."""
    return canonical_key(g.n, g.masks)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    order = canonical_order(g.n, g.masks)
    position = [0] * g.n
    for pos, v in enumerate(order):
        position[v] = pos
    return permute(g, position)
