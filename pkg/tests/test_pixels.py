from __future__ import annotations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from graphfold import (
    AdjacencyMode,
    PixelImage,
    connected_components,
    from_pixels,
    is_connected,
    pappy,
)
from graphfold.pixels import load_points, parse_points

# Hand-transcribed adjacency graphs of the bundled 38-point sprite, in the
# documented row-major vertex order (y descending, then x ascending).  The
# 4-adjacency relation yields 40 edges and three components (the two
# bottom "arms" only touch the body diagonally); 8-adjacency yields 68
# edges and a single connected piece.
SPRITE_EDGES_4 = [
    (0, 7), (1, 2), (1, 10), (2, 3), (3, 4), (3, 11), (4, 5), (4, 12),
    (5, 6), (6, 13), (7, 15), (8, 9), (8, 16), (9, 10), (10, 17), (11, 12),
    (11, 19), (12, 20), (13, 14), (13, 22), (14, 15), (16, 23), (17, 18),
    (17, 24), (18, 19), (19, 20), (20, 21), (21, 22), (22, 25), (24, 26),
    (25, 29), (26, 27), (27, 30), (28, 29), (28, 33), (30, 31), (31, 32),
    (32, 33), (34, 36), (35, 37),
]
SPRITE_EDGES_8 = [
    (0, 7), (1, 2), (1, 9), (1, 10), (2, 3), (2, 10), (2, 11), (3, 4),
    (3, 11), (3, 12), (4, 5), (4, 11), (4, 12), (5, 6), (5, 12), (5, 13),
    (6, 13), (6, 14), (7, 14), (7, 15), (8, 9), (8, 16), (9, 10), (9, 16),
    (9, 17), (10, 17), (10, 18), (11, 12), (11, 18), (11, 19), (11, 20),
    (12, 19), (12, 20), (12, 21), (13, 14), (13, 21), (13, 22), (14, 15),
    (14, 22), (16, 23), (17, 18), (17, 24), (18, 19), (18, 24), (19, 20),
    (20, 21), (21, 22), (21, 25), (22, 25), (24, 26), (24, 27), (25, 28),
    (25, 29), (26, 27), (26, 30), (27, 30), (27, 31), (28, 29), (28, 32),
    (28, 33), (29, 33), (30, 31), (30, 34), (31, 32), (32, 33), (33, 35),
    (34, 36), (35, 37),
]


points = st.sets(
    st.tuples(st.integers(-8, 8), st.integers(-8, 8)), max_size=25)


class TestAdjacencyModes:
    def test_horizontal_pair_adjacent_in_both_modes(self):
        img = PixelImage([(0, 0), (1, 0)])
        for mode in AdjacencyMode:
            g = from_pixels(img, mode)
            assert g.n == 2 and g.edge_count == 1

    def test_diagonal_pair_only_under_eight(self):
        img = PixelImage([(0, 0), (1, 1)])
        assert from_pixels(img, AdjacencyMode.FOUR).edge_count == 0
        assert from_pixels(img, AdjacencyMode.EIGHT).edge_count == 1

    def test_vertex_order_is_row_major(self):
        img = PixelImage([(0, 0), (1, 1), (0, 1)])
        assert img.sorted_points() == [(0, 1), (1, 1), (0, 0)]
        g = from_pixels(img, AdjacencyMode.FOUR)
        # (0,1)-(1,1) horizontal, (0,1)-(0,0) vertical
        assert g.edges() == [(0, 1), (0, 2)]

    def test_empty_image(self):
        g = from_pixels(PixelImage([]), AdjacencyMode.FOUR)
        assert g.n == 0

    @given(points)
    def test_four_edges_subset_of_eight(self, pts):
        img = PixelImage(pts)
        e4 = set(from_pixels(img, AdjacencyMode.FOUR).edges())
        e8 = set(from_pixels(img, AdjacencyMode.EIGHT).edges())
        assert e4 <= e8

    @given(points)
    def test_vertex_count_is_point_count(self, pts):
        img = PixelImage(pts)
        assert from_pixels(img, AdjacencyMode.EIGHT).n == len(img)


class TestBundledSprite:
    def test_has_38_points(self):
        assert len(pappy()) == 38

    def test_four_adjacency_matches_transcription(self):
        g = from_pixels(pappy(), AdjacencyMode.FOUR)
        assert g.edges() == SPRITE_EDGES_4

    def test_eight_adjacency_matches_transcription(self):
        g = from_pixels(pappy(), AdjacencyMode.EIGHT)
        assert g.edges() == SPRITE_EDGES_8

    def test_component_structure(self):
        # the arm pixels touch the body only diagonally, so 4-adjacency
        # strands them; 8-adjacency picks those contacts up
        g4 = from_pixels(pappy(), AdjacencyMode.FOUR)
        assert not is_connected(g4)
        assert sorted(len(c) for c in connected_components(g4)) == [2, 2, 34]
        g8 = from_pixels(pappy(), AdjacencyMode.EIGHT)
        assert is_connected(g8)


class TestPointFileFormat:
    def test_parse_with_comments_and_blanks(self):
        img = parse_points("# heading\n1 2\n\n3 4  # trailing\n")
        assert img.points == {(1, 2), (3, 4)}

    def test_duplicates_collapse(self):
        assert len(parse_points("1 1\n1 1\n")) == 1

    def test_wrong_token_count_names_line(self):
        with pytest.raises(ValueError, match="<string>:2"):
            parse_points("0 0\n1 2 3\n")

    def test_non_integer_names_line(self):
        with pytest.raises(ValueError, match=":1"):
            parse_points("a b\n")

    def test_load_points_names_path(self, tmp_path):
        path = tmp_path / "img.txt"
        path.write_text("0 0\nbroken\n")
        with pytest.raises(ValueError, match="img.txt:2"):
            load_points(path)

    def test_round_trip_via_file(self, tmp_path):
        path = tmp_path / "img.txt"
        path.write_text("0 0\n1 0\n2 0\n")
        img = load_points(path)
        assert from_pixels(img, AdjacencyMode.FOUR).edge_count == 2


def test_pixel_image_is_immutable_value():
    a = PixelImage([(0, 0), (1, 0)])
    b = PixelImage([(1, 0), (0, 0)])
    assert a == b and hash(a) == hash(b)
    with pytest.raises(AttributeError):
        a.points = frozenset()
