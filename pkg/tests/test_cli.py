from __future__ import annotations

import json

import pytest

from graphfold import cycle_graph, generate_levels, write_levels
from graphfold import graph6
from graphfold.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestReduce:
    def test_graph6_literal_reducible(self, capsys):
        code, out, _ = run(capsys, "reduce", graph6.encode(cycle_graph(4)))
        assert code == 0
        assert "reducible: yes" in out
        assert "witness:" in out
        assert "fully reduced:" in out

    def test_graph6_literal_irreducible_exits_one(self, capsys):
        code, out, _ = run(capsys, "reduce", graph6.encode(cycle_graph(5)))
        assert code == 1
        assert "reducible: no" in out

    def test_graph6_file(self, tmp_path, capsys):
        path = tmp_path / "g.g6"
        path.write_text(graph6.encode(cycle_graph(4)) + "\n")
        code, out, _ = run(capsys, "reduce", str(path))
        assert code == 0

    def test_pixel_file_modes(self, tmp_path, capsys):
        path = tmp_path / "img.txt"
        path.write_text("0 0\n1 1\n")  # diagonal pair
        code, out, _ = run(capsys, "reduce", str(path), "--mode", "eight")
        assert code == 0 and "2 vertices, 1 edges (1 component(s))" in out
        code, out, _ = run(capsys, "reduce", str(path), "--mode", "four")
        assert code == 1 and "2 vertices, 0 edges" in out

    def test_garbage_input_exits_two(self, capsys):
        code, _, err = run(capsys, "reduce", "\x01nope")
        assert code == 2
        assert "error" in err


class TestEnumerate:
    def test_order_five(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--order", "5")
        assert code == 0
        assert "connected classes 21" in out
        assert "irreducible 1" in out

    def test_catalog_export_and_verify(self, tmp_path, capsys):
        cat = tmp_path / "cat.g6"
        code, out, _ = run(capsys, "enumerate", "--order", "6",
                           "--catalog", str(cat))
        assert code == 0 and cat.exists()
        code, out, _ = run(capsys, "verify-catalog", str(cat))
        assert code == 0
        assert "OK" in out

    def test_verify_catalog_rejects_bad_file(self, tmp_path, capsys):
        cat = tmp_path / "cat.g6"
        cat.write_text(graph6.encode(cycle_graph(4)) + "\n")
        code, out, _ = run(capsys, "verify-catalog", str(cat))
        assert code == 1
        assert "reducible" in out

    def test_out_of_range_order_exits_two(self, capsys):
        code, _, err = run(capsys, "enumerate", "--order", "12")
        assert code == 2
        assert "1..9" in err

    def test_jobs_flag(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--order", "6", "--jobs", "2")
        assert code == 0 and "irreducible 1" in out


class TestLevels:
    def test_generate_writes_corpus(self, tmp_path, capsys):
        out_path = tmp_path / "levels.json"
        code, out, _ = run(capsys, "levels", "generate", "--orders", "5..5",
                           "--out", str(out_path))
        assert code == 0
        doc = json.loads(out_path.read_text())
        assert len(doc["levels"]) == 20

    def test_generate_to_stdout(self, capsys):
        code, out, _ = run(capsys, "levels", "generate", "--orders", "2")
        assert code == 0
        assert json.loads(out)["levels"][0]["n"] == 2

    def test_generate_is_reproducible(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "levels", "generate", "--orders", "4..5", "--out", str(a))
        run(capsys, "levels", "generate", "--orders", "4..5", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_include_irreducible_ships_marked_levels(self, tmp_path, capsys):
        out_path = tmp_path / "levels.json"
        code, _, _ = run(capsys, "levels", "generate", "--orders", "5..5",
                         "--include-irreducible", "--out", str(out_path))
        assert code == 0
        doc = json.loads(out_path.read_text())
        assert len(doc["levels"]) == 21
        assert sum(1 for lv in doc["levels"] if lv.get("unsolvable")) == 1

    def test_bad_order_range_exits_two(self, capsys):
        code, _, err = run(capsys, "levels", "generate", "--orders", "9..2")
        assert code == 2
        assert "order range" in err

    def test_check_win_and_lose(self, tmp_path, capsys):
        corpus = tmp_path / "levels.json"
        levels = generate_levels([2])
        write_levels(levels, corpus)
        lid = levels[0].id
        code, out, _ = run(capsys, "levels", "check", "--corpus", str(corpus),
                           lid, "0,0")
        assert code == 0 and "win: yes" in out
        code, out, _ = run(capsys, "levels", "check", "--corpus", str(corpus),
                           lid, "0,1")
        assert code == 1 and "win: no" in out

    def test_check_unknown_level_exits_two(self, tmp_path, capsys):
        corpus = tmp_path / "levels.json"
        write_levels(generate_levels([2]), corpus)
        code, _, err = run(capsys, "levels", "check", "--corpus", str(corpus),
                           "nope", "0,0")
        assert code == 2
        assert "not found" in err

    def test_check_bad_placement_exits_two(self, tmp_path, capsys):
        corpus = tmp_path / "levels.json"
        levels = generate_levels([2])
        write_levels(levels, corpus)
        code, _, err = run(capsys, "levels", "check", "--corpus", str(corpus),
                           levels[0].id, "0,1,2")
        assert code == 2
        assert "placement" in err

    def test_serve_dir_writes_bundle(self, tmp_path, capsys):
        out_dir = tmp_path / "bundle"
        code, out, _ = run(capsys, "levels", "serve-dir", str(out_dir),
                           "--orders", "2..4", "--fixtures", "4")
        assert code == 0
        levels_doc = json.loads((out_dir / "levels.json").read_text())
        fixtures_doc = json.loads((out_dir / "fixtures.json").read_text())
        assert levels_doc["levels"]
        assert fixtures_doc["fixtures"]
        ids = {lv["id"] for lv in levels_doc["levels"]}
        assert all(fx["level"] in ids for fx in fixtures_doc["fixtures"])

    def test_fixtures_from_corpus(self, tmp_path, capsys):
        corpus = tmp_path / "levels.json"
        write_levels(generate_levels([4]), corpus)
        out_path = tmp_path / "fixtures.json"
        code, out, _ = run(capsys, "levels", "fixtures", "--corpus",
                           str(corpus), "--out", str(out_path))
        assert code == 0
        doc = json.loads(out_path.read_text())
        assert doc["fixtures"]
        assert "coverage" in out


def test_console_script_is_wired():
    from importlib.metadata import entry_points
    eps = entry_points(group="console_scripts")
    assert any(ep.name == "graphfold" for ep in eps)
