"""Enumerate connected graphs up to isomorphism and classify reducibility.

Classes of order k are grown from the classes of order k-1: a new vertex is
attached by every nonempty neighborhood subset, and the results are
deduplicated by canonical key.  Starting from the one-vertex graph this
reaches every connected class (every connected graph has a non-cut vertex
whose removal leaves a smaller connected graph), and nonempty attachment
keeps every candidate connected, so no separate connectivity filter is
needed.

Classifying the stream by reducibility reproduces the counts of OEIS
A248571: 1, 0, 0, 0, 1, 1, 3, 28, 547 for orders 1..9.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from . import graph6
from .canonical import canonical_key
from .graphs import Graph
from .reduction import is_reducible

MAX_ORDER = 9


@dataclass(frozen=True)
class CatalogEntry:
    """One connected irreducible isomorphism class."""

    graph: Graph
    n: int
    canonical: str


class ClassifyResult(NamedTuple):
    count: int                  # number of irreducible classes
    entries: list[CatalogEntry]
    connected_total: int        # number of connected classes of this order


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")


def connected_class_keys(n: int) -> list[str]:
    """Sorted canonical keys of all connected isomorphism classes of order n."""
    _check_order(n)
    keys = {canonical_key(1, (0,))}
    for k in range(2, n + 1):
        new_bit = 1 << (k - 1)
        grown: set[str] = set()
        for key in keys:
            parent = graph6.decode(key).masks
            for subset in range(1, new_bit):
                child = [
                    m | new_bit if subset >> v & 1 else m
                    for v, m in enumerate(parent)
                ]
                child.append(subset)
                grown.add(canonical_key(k, child))
        keys = grown
    return sorted(keys)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonically labeled representative per connected class of order n,
    streamed in canonical-key order."""
    for key in connected_class_keys(n):
        yield graph6.decode(key)


def _is_reducible_key(key: str) -> bool:
    return is_reducible(graph6.decode(key))


def classify(n: int, jobs: int | None = None) -> ClassifyResult:
    """Count and collect the connected irreducible classes of order n.

    The per-graph reducibility decisions are independent, so `jobs > 1`
    spreads them over a process pool; results are merged back in key order,
    keeping the output identical to a sequential run.
    """
    keys = connected_class_keys(n)
    if jobs is not None and jobs > 1 and len(keys) > 1:
        chunk = max(64, len(keys) // (jobs * 8))
        with multiprocessing.Pool(jobs) as pool:
            flags = pool.map(_is_reducible_key, keys, chunksize=chunk)
    else:
        flags = [_is_reducible_key(key) for key in keys]
    entries = [
        CatalogEntry(graph6.decode(key), n, key)
        for key, reducible in zip(keys, flags)
        if not reducible
    ]
    return ClassifyResult(len(entries), entries, len(keys))


def classify_stream(graphs: Iterable[Graph]) -> ClassifyResult:
    """Classify graphs supplied from outside (say, another generator's
    graph6 output) instead of the built-in enumeration; entries keep the
    input order."""
    entries = []
    total = 0
    for g in graphs:
        total += 1
        if not is_reducible(g):
            entries.append(CatalogEntry(g, g.n, canonical_key(g.n, g.masks)))
    return ClassifyResult(len(entries), entries, total)


def export_catalog(entries: Iterable[CatalogEntry], path: str | os.PathLike) -> None:
    """Write a catalog file: header comment, then graph6 lines in key order."""
    rows = sorted(entries, key=lambda e: (e.n, e.canonical))
    orders = sorted({e.n for e in rows})
    label = ",".join(str(o) for o in orders) if orders else "-"
    try:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(f"# connected irreducible graphs; order {label}; count {len(rows)}\n")
            for entry in rows:
                fh.write(entry.canonical + "\n")
    except OSError as exc:
        raise OSError(f"cannot write catalog to {path}: {exc}") from exc


@dataclass(frozen=True)
class CatalogCheck:
    ok: bool
    total: int
    problems: tuple[str, ...]


def verify_catalog(path: str | os.PathLike) -> CatalogCheck:
    """Re-check a catalog file: every entry irreducible, no isomorphic pair."""
    try:
        graphs = graph6.load_file(path)
    except OSError as exc:
        raise OSError(f"cannot read catalog {path}: {exc}") from exc
    problems = []
    seen: dict[str, int] = {}
    for i, g in enumerate(graphs, start=1):
        key = canonical_key(g.n, g.masks)
        if key in seen:
            problems.append(f"entry {i} is isomorphic to entry {seen[key]}")
        else:
            seen[key] = i
        if is_reducible(g):
            problems.append(f"entry {i} ({graph6.encode(g)}) is reducible")
    return CatalogCheck(not problems, len(graphs), tuple(problems))
