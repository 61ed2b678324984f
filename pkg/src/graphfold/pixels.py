"""Pixel images on the integer lattice and their adjacency graphs.

A digital image here is just a finite point set; its topology lives entirely
in which pixels count as adjacent.  Two planar conventions are supported:
4-adjacency (no diagonals, Manhattan distance 1) and 8-adjacency (diagonals
allowed, Chebyshev distance 1).
"""

from __future__ import annotations

import enum
import os
from importlib import resources
from typing import Iterable

from .graphs import Graph

Point = tuple[int, int]


class AdjacencyMode(enum.Enum):
    """Planar pixel adjacency: FOUR excludes diagonals, EIGHT includes them."""

    FOUR = 4
    EIGHT = 8

    def adjacent(self, p: Point, q: Point) -> bool:
        dx = abs(p[0] - q[0])
        dy = abs(p[1] - q[1])
        if self is AdjacencyMode.FOUR:
            return dx + dy == 1
        return max(dx, dy) == 1


class PixelImage:
    """An immutable finite set of integer (x, y) lattice points."""

    __slots__ = ("points",)

    points: frozenset[Point]

    def __init__(self, points: Iterable[Point]):
        pts = frozenset((int(x), int(y)) for x, y in points)
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("PixelImage is immutable")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.sorted_points())

    def __contains__(self, p: Point) -> bool:
        return p in self.points

    def __eq__(self, other) -> bool:
        return isinstance(other, PixelImage) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PixelImage({len(self.points)} points)"

    def sorted_points(self) -> list[Point]:
        """Row-major vertex order: y descending, then x ascending.

        This is the documented vertex numbering of :func:`from_pixels`, so
        index i of the graph is point i of this list.
        """
        return sorted(self.points, key=lambda p: (-p[1], p[0]))


def from_pixels(image: PixelImage, mode: AdjacencyMode) -> Graph:
    """Adjacency graph of an image; one vertex per point in row-major order."""
    pts = image.sorted_points()
    n = len(pts)
    index = {p: i for i, p in enumerate(pts)}
    masks = [0] * n
    if mode is AdjacencyMode.FOUR:
        offsets = [(1, 0), (0, 1)]
    else:
        offsets = [(1, 0), (0, 1), (1, 1), (1, -1)]
    for i, (x, y) in enumerate(pts):
        for dx, dy in offsets:
            j = index.get((x + dx, y + dy))
            if j is not None:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return Graph.from_masks(masks)


def parse_points(text: str, source: str = "<string>") -> PixelImage:
    """Parse the plain-text point format: one `x y` pair per line.

    Blank lines are skipped; `#` starts a comment that runs to end of line.
    """
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(
                f"{source}:{lineno}: expected 'x y', got {line!r}")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(
                f"{source}:{lineno}: non-integer coordinate in {line!r}") from None
        points.append((x, y))
    return PixelImage(points)


def load_points(path: str | os.PathLike) -> PixelImage:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_points(fh.read(), source=str(path))


def pappy() -> PixelImage:
    """The bundled 38-pixel demo sprite used by the examples and tests."""
    text = resources.files("graphfold.assets").joinpath("pappy.txt").read_text()
    return parse_points(text, source="pappy.txt")
