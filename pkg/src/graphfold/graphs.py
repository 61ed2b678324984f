"""Finite simple graphs as immutable values.

Vertices are always the dense range 0..n-1.  Adjacency is stored as one int
bitmask per vertex; every algorithm in this package works on those masks, so
graphs up to a few dozen vertices cost almost nothing to copy or compare.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Graph:
    """Undirected simple graph: symmetric, irreflexive adjacency on 0..n-1.

    Instances are immutable and hashable; two graphs compare equal exactly
    when they have the same vertex count and the same edge set (labels
    included -- use :func:`are_isomorphic` for label-free comparison).
    """

    __slots__ = ("n", "masks")

    n: int
    masks: tuple[int, ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", tuple(masks))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Trusted constructor from per-vertex neighbor bitmasks."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(masks))
        object.__setattr__(g, "masks", tuple(masks))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.masks[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits(self.masks[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            m = self.masks[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closed_neighborhood(g: Graph, v: int) -> set[int]:
    """The vertex v together with everything adjacent to it."""
    g._check_vertex(v)
    return {v, *_bits(g.masks[v])}


def closed_masks(g: Graph) -> list[int]:
    """Per-vertex closed-neighborhood bitmasks (self bit included)."""
    return [m | (1 << v) for v, m in enumerate(g.masks)]


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0.

    The empty graph counts as connected by convention.
    """
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    masks = g.masks
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= masks[v]
        frontier = grow & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, ordered by smallest member."""
    unseen = (1 << g.n) - 1
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= g.masks[v]
            frontier = grow & ~seen
            seen |= frontier
        comps.append(list(_bits(seen)))
        unseen &= ~seen
    return comps


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on the given vertices, relabeled densely in ascending order.

    Returns the new graph and the old->new vertex mapping.
    """
    kept = sorted(set(vertices))
    for v in kept:
        g._check_vertex(v)
    relabel = {old: new for new, old in enumerate(kept)}
    masks = [0] * len(kept)
    for old in kept:
        new = relabel[old]
        for u in _bits(g.masks[old]):
            if u in relabel:
                masks[new] |= 1 << relabel[u]
    return Graph.from_masks(masks), relabel


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel: vertex v of g becomes vertex perm[v] of the result."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    masks = [0] * g.n
    for v in range(g.n):
        pv = perm[v]
        for u in _bits(g.masks[v]):
            masks[pv] |= 1 << perm[u]
    return Graph.from_masks(masks)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Concatenate graphs; part k's vertices are shifted past parts 0..k-1."""
    masks: list[int] = []
    offset = 0
    for p in parts:
        masks.extend(m << offset for m in p.masks)
        offset += p.n
    return Graph.from_masks(masks)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Edge-preserving bijection test by direct backtracking search.

    Meant for graphs up to ~10 vertices; deliberately independent of the
    canonical-labeling machinery so the two can cross-check each other.
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    n = g.n
    if n == 0:
        return True
    if _degree_profile(g) != _degree_profile(h):
        return False

    deg_g = [m.bit_count() for m in g.masks]
    deg_h = [m.bit_count() for m in h.masks]
    # map vertices of g in order of scarcest degree first
    by_rarity = sorted(range(n), key=lambda v: (deg_g.count(deg_g[v]), v))
    image = [-1] * n  # g vertex -> h vertex
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = by_rarity[k]
        for w in range(n):
            if used[w] or deg_h[w] != deg_g[v]:
                continue
            ok = True
            for prev in by_rarity[:k]:
                if (g.masks[v] >> prev & 1) != (h.masks[w] >> image[prev] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return extend(0)


def _degree_profile(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degs = [m.bit_count() for m in g.masks]
    prof = [(degs[v], tuple(sorted(degs[u] for u in _bits(g.masks[v])))) for v in range(g.n)]
    return sorted(prof)


# -- small factories used all over the tests and the level generator --------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
