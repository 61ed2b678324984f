"""Reduction maps: deciding, constructing, enumerating, and applying them.

A reduction of a graph is a self-map f on the vertices such that

  (R1) f is not surjective: at least one vertex is vacated,
  (R2) f(x) stays inside the closed neighborhood of x, and
  (R3) adjacent vertices land on equal-or-adjacent vertices.

A graph admitting such a map is *reducible*; applying the map and keeping the
induced subgraph on its image removes vertices without changing the image's
topological shape.  Iterating until no reduction exists yields an irreducible
graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import (
    Graph,
    closed_masks,
    connected_components,
    disjoint_union,
    induced_subgraph,
)

ReductionMap = tuple[int, ...]


@dataclass(frozen=True)
class ReductionReport:
    """Per-condition diagnostics for a candidate reduction map.

    `vacant` lists the vertices missing from the image (R1 holds iff it is
    nonempty), `strayed` the vertices mapped outside their closed neighborhood
    (R2 violations), and `broken_edges` the original edges whose endpoints end
    up neither equal nor adjacent (R3 violations -- a game UI paints these
    red).
    """

    vacant: tuple[int, ...]
    strayed: tuple[int, ...]
    broken_edges: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return bool(self.vacant) and not self.strayed and not self.broken_edges

    def failed_conditions(self) -> tuple[str, ...]:
        out = []
        if not self.vacant:
            out.append("no vertex is vacated")
        if self.strayed:
            out.append(f"moved outside closed neighborhood: {list(self.strayed)}")
        if self.broken_edges:
            out.append(f"adjacency broken on edges: {list(self.broken_edges)}")
        return tuple(out)


@dataclass(frozen=True)
class ReductionVerdict:
    reducible: bool
    witness: ReductionMap | None = None

    def __post_init__(self):
        if self.reducible != (self.witness is not None):
            raise ValueError("witness must be present exactly when reducible")


def _check_map(g: Graph, f: Sequence[int]) -> ReductionMap:
    if len(f) != g.n:
        raise ValueError(f"map has length {len(f)}, graph has {g.n} vertices")
    fm = tuple(f)
    for x, fx in enumerate(fm):
        if not 0 <= fx < g.n:
            raise ValueError(f"f({x}) = {fx} is out of range for n={g.n}")
    return fm


def diagnose_reduction(g: Graph, f: Sequence[int]) -> ReductionReport:
    """Evaluate all three reduction conditions and report every violation."""
    fm = _check_map(g, f)
    image = set(fm)
    vacant = tuple(v for v in range(g.n) if v not in image)
    closed = closed_masks(g)
    strayed = tuple(x for x, fx in enumerate(fm) if not closed[x] >> fx & 1)
    broken = tuple(
        (u, v) for u, v in g.edges()
        if fm[u] != fm[v] and not g.masks[fm[u]] >> fm[v] & 1
    )
    return ReductionReport(vacant, strayed, broken)


def verify_reduction(g: Graph, f: Sequence[int]) -> bool:
    """True iff f satisfies R1, R2 and R3 on g."""
    return diagnose_reduction(g, f).ok


def find_reduction(g: Graph) -> ReductionVerdict:
    """Search for any reduction map; deterministic for a given graph.

    Non-surjectivity is enforced by designating one vacated vertex and trying
    each candidate in ascending order.  With the vacated vertex fixed, the
    rest is a finite-domain constraint search: domains start as closed
    neighborhoods minus the vacated vertex, variables are assigned
    smallest-domain-first (ties to the smallest vertex id), values in
    ascending order, and each assignment forward-prunes the domains of
    unassigned neighbors to the closed neighborhood of the chosen image.
    """
    n = g.n
    closed = closed_masks(g)
    for vacated in range(n):
        keep = ~(1 << vacated)
        domains = [closed[x] & keep for x in range(n)]
        if 0 in domains:  # vacated vertex has nowhere to go
            continue
        solution = _solve(g.masks, closed, domains)
        if solution is not None:
            return ReductionVerdict(True, tuple(solution))
    return ReductionVerdict(False, None)


def _solve(masks: Sequence[int], closed: Sequence[int],
           domains: list[int]) -> list[int] | None:
    """MRV backtracking with forward checking over bitmask domains."""
    n = len(domains)
    assigned = [-1] * n

    def backtrack(remaining: int) -> bool:
        if remaining == 0:
            return True
        # smallest remaining domain, ties to smallest vertex id
        var = -1
        best = 1 << 62
        for x in range(n):
            if assigned[x] < 0:
                size = domains[x].bit_count()
                if size < best:
                    best = size
                    var = x
                    if size == 1:
                        break
        dom = domains[var]
        while dom:
            low = dom & -dom
            dom ^= low
            a = low.bit_length() - 1
            assigned[var] = a
            pruned: list[tuple[int, int]] = []
            wipeout = False
            nb = masks[var]
            allowed = closed[a]
            while nb:
                nlow = nb & -nb
                nb ^= nlow
                y = nlow.bit_length() - 1
                if assigned[y] < 0:
                    old = domains[y]
                    new = old & allowed
                    if new != old:
                        domains[y] = new
                        pruned.append((y, old))
                        if not new:
                            wipeout = True
                            break
            if not wipeout and backtrack(remaining - 1):
                return True
            for y, old in pruned:
                domains[y] = old
            assigned[var] = -1
        return False

    if backtrack(n):
        return assigned
    return None


def is_reducible(g: Graph) -> bool:
    return find_reduction(g).reducible


def enumerate_reductions(g: Graph) -> list[ReductionMap]:
    """Every map satisfying R1-R3, in lexicographic order of the value tuple.

    Complete search with R3 forward checking; intended for small graphs
    (the search tree is bounded by the product of the closed-neighborhood
    sizes, and the result itself can be huge on dense graphs).
    """
    n = g.n
    if n == 0:
        return []
    closed = closed_masks(g)
    masks = g.masks
    out: list[ReductionMap] = []
    values = [0] * n

    def assign(x: int, domains: list[int]) -> None:
        if x == n:
            if len(set(values)) < n:
                out.append(tuple(values))
            return
        dom = domains[x]
        while dom:
            low = dom & -dom
            dom ^= low
            a = low.bit_length() - 1
            values[x] = a
            nb = masks[x] >> (x + 1)
            if nb:
                child = domains.copy()
                allowed = closed[a]
                y = x + 1
                wipeout = False
                while nb:
                    if nb & 1:
                        child[y] &= allowed
                        if not child[y]:
                            wipeout = True
                            break
                    nb >>= 1
                    y += 1
                if not wipeout:
                    assign(x + 1, child)
            else:
                assign(x + 1, domains)

    assign(0, closed.copy())
    return out


def reduce_step(g: Graph, f: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Apply one reduction: induced subgraph on image(f), relabeled densely.

    Kept vertices stay in ascending original-id order.  Returns the smaller
    graph and the old->new mapping of the kept vertices.
    """
    fm = _check_map(g, f)
    report = diagnose_reduction(g, fm)
    if not report.ok:
        raise ValueError("not a valid reduction map: " + "; ".join(report.failed_conditions()))
    return induced_subgraph(g, set(fm))


def reduce_fully(g: Graph) -> Graph:
    """Iterate reductions until the graph is irreducible.

    Each step keeps only the image of a found reduction, so the vertex count
    strictly decreases and termination is guaranteed.  A disconnected graph
    is handled one component at a time (components ordered by their smallest
    original vertex id) and reassembled as a disjoint union.
    """
    comps = connected_components(g)
    if len(comps) > 1:
        return disjoint_union(
            [reduce_fully(induced_subgraph(g, comp)[0]) for comp in comps])
    while True:
        verdict = find_reduction(g)
        if not verdict.reducible:
            return g
        g, _ = reduce_step(g, verdict.witness)
