"""Command-line entry point.

Verbs:
  reduce          decide a graph (graph6 or pixel file), print witness + fully
                  reduced form
  enumerate       count connected irreducible classes of one order, optionally
                  exporting the catalog
  verify-catalog  re-check a catalog file for reducible or isomorphic entries
  levels ...      generate, check, bundle, and fixture the game corpus

Exit codes: 0 success / true verdict, 1 false verdict, 2 errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import graph6
from .catalog import classify, export_catalog, verify_catalog
from .graphs import Graph, connected_components, induced_subgraph
from .levels import (
    conformance_fixtures,
    check_win,
    fixture_coverage,
    generate_levels,
    read_levels,
    write_fixtures,
    write_levels,
)
from .pixels import AdjacencyMode, load_points, from_pixels, parse_points
from .reduction import find_reduction, reduce_fully


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphfold",
        description="Graph reducibility: solve, enumerate, and play.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_reduce = sub.add_parser(
        "reduce", help="decide reducibility of a graph6 string or pixel file")
    p_reduce.add_argument("input", help="graph6 text, a .g6 file, or a pixel file")
    p_reduce.add_argument("--mode", choices=["four", "eight"], default="eight",
                          help="pixel adjacency (default: eight)")

    p_enum = sub.add_parser(
        "enumerate", help="count connected irreducible classes of one order")
    p_enum.add_argument("--order", type=int, required=True, metavar="N")
    p_enum.add_argument("--catalog", metavar="PATH",
                        help="write the irreducible catalog as graph6")
    p_enum.add_argument("--jobs", type=int, default=None, metavar="K",
                        help="classify with K worker processes")

    p_verify = sub.add_parser(
        "verify-catalog", help="re-check a catalog file")
    p_verify.add_argument("path")

    p_levels = sub.add_parser("levels", help="game level tooling")
    lsub = p_levels.add_subparsers(dest="levels_command", required=True)

    p_gen = lsub.add_parser("generate", help="write a level corpus")
    p_gen.add_argument("--orders", default="2..6", metavar="A..B",
                       help="order range, e.g. 5 or 2..6 (default: 2..6)")
    p_gen.add_argument("--limit", type=int, default=None,
                       help="max levels per order")
    p_gen.add_argument("--include-irreducible", action="store_true",
                       help="also ship unsolvable levels, marked as such")
    p_gen.add_argument("--out", metavar="PATH", default=None,
                       help="output file (default: stdout)")

    p_check = lsub.add_parser("check", help="judge one placement")
    p_check.add_argument("--corpus", required=True, metavar="PATH")
    p_check.add_argument("level_id")
    p_check.add_argument("placement",
                         help="comma-separated spots, e.g. 1,2,3,4,0,0")

    p_serve = lsub.add_parser(
        "serve-dir", help="write the static data bundle the web UI loads")
    p_serve.add_argument("dir")
    p_serve.add_argument("--orders", default="2..6", metavar="A..B")
    p_serve.add_argument("--limit", type=int, default=None)
    p_serve.add_argument("--fixtures", type=int, default=8, metavar="K",
                         help="random fixtures per level (default: 8)")
    p_serve.add_argument("--seed", type=int, default=0)

    p_fix = lsub.add_parser(
        "fixtures", help="export checker conformance fixtures for a corpus")
    p_fix.add_argument("--corpus", required=True, metavar="PATH")
    p_fix.add_argument("--out", required=True, metavar="PATH")
    p_fix.add_argument("--per-level", type=int, default=8)
    p_fix.add_argument("--seed", type=int, default=0)

    return parser


def _parse_orders(text: str) -> list[int]:
    text = text.strip()
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ValueError(f"bad order range {text!r}; expected N or A..B") from None
    if hi < lo:
        raise ValueError(f"bad order range {text!r}: {hi} < {lo}")
    return list(range(lo, hi + 1))


def _looks_like_pixels(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        return len(parts) == 2 and all(
            p.lstrip("-").isdigit() for p in parts)
    return False


def _load_reduce_input(arg: str, mode: AdjacencyMode) -> Graph:
    path = Path(arg)
    if path.exists():
        text = path.read_text(encoding="utf-8")
        if _looks_like_pixels(text):
            return from_pixels(parse_points(text, source=str(path)), mode)
        lines = list(graph6.iter_lines(text))
        if not lines:
            raise ValueError(f"{path}: no graph found")
        return graph6.decode(lines[0])
    return graph6.decode(arg)


def _cmd_reduce(args) -> int:
    mode = AdjacencyMode.FOUR if args.mode == "four" else AdjacencyMode.EIGHT
    g = _load_reduce_input(args.input, mode)
    print(f"graph: {g.n} vertices, {g.edge_count} edges "
          f"({len(connected_components(g))} component(s))")
    verdict = find_reduction(g)
    if verdict.reducible:
        print("reducible: yes")
        print("witness: " + " ".join(
            f"{x}->{fx}" for x, fx in enumerate(verdict.witness)))
    else:
        print("reducible: no")
    reduced = reduce_fully(g)
    print(f"fully reduced: {graph6.encode(reduced)} "
          f"({reduced.n} vertices, {reduced.edge_count} edges)")
    return 0 if verdict.reducible else 1


def _cmd_enumerate(args) -> int:
    result = classify(args.order, jobs=args.jobs)
    print(f"order {args.order}: connected classes {result.connected_total}, "
          f"irreducible {result.count}")
    if args.catalog:
        export_catalog(result.entries, args.catalog)
        print(f"catalog written to {args.catalog}")
    return 0


def _cmd_verify_catalog(args) -> int:
    report = verify_catalog(args.path)
    if report.ok:
        print(f"{args.path}: OK ({report.total} graphs, pairwise non-isomorphic, "
              f"all irreducible)")
        return 0
    for problem in report.problems:
        print(f"{args.path}: {problem}")
    return 1


def _cmd_levels_generate(args) -> int:
    levels = generate_levels(_parse_orders(args.orders), limit=args.limit,
                             include_irreducible=args.include_irreducible)
    if args.out:
        write_levels(levels, args.out)
        print(f"{len(levels)} levels written to {args.out}")
    else:
        import json

        from .levels import levels_document
        print(json.dumps(levels_document(levels), indent=2))
    return 0


def _parse_placement(text: str, n: int) -> tuple[int, ...]:
    try:
        spots = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad placement {text!r}; expected comma-separated "
                         f"integers") from None
    if len(spots) != n:
        raise ValueError(f"placement has {len(spots)} spots, level has {n}")
    return spots


def _cmd_levels_check(args) -> int:
    levels = {lv.id: lv for lv in read_levels(args.corpus)}
    if args.level_id not in levels:
        raise ValueError(f"level '{args.level_id}' not found in {args.corpus}")
    level = levels[args.level_id]
    placement = _parse_placement(args.placement, level.graph.n)
    chk = check_win(level, placement)
    print(f"win: {'yes' if chk.won else 'no'}")
    print(f"vacant spots: {list(chk.vacant)}")
    if chk.strayed:
        print(f"vertices out of reach: {list(chk.strayed)}")
    if chk.red_edges:
        print(f"broken adjacencies: {[list(e) for e in chk.red_edges]}")
    return 0 if chk.won else 1


def _cmd_levels_serve_dir(args) -> int:
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    levels = generate_levels(_parse_orders(args.orders), limit=args.limit)
    write_levels(levels, out / "levels.json")
    fixtures = conformance_fixtures(levels, per_level=args.fixtures,
                                    seed=args.seed)
    write_fixtures(fixtures, out / "fixtures.json")
    cover = fixture_coverage(fixtures)
    print(f"{len(levels)} levels and {cover['total']} fixtures "
          f"written to {out}")
    print(f"fixture coverage: {cover}")
    return 0


def _cmd_levels_fixtures(args) -> int:
    levels = read_levels(args.corpus)
    fixtures = conformance_fixtures(levels, per_level=args.per_level,
                                    seed=args.seed)
    write_fixtures(fixtures, args.out)
    cover = fixture_coverage(fixtures)
    print(f"{cover['total']} fixtures written to {args.out}")
    print(f"fixture coverage: {cover}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "reduce": _cmd_reduce,
        "enumerate": _cmd_enumerate,
        "verify-catalog": _cmd_verify_catalog,
    }
    level_handlers = {
        "generate": _cmd_levels_generate,
        "check": _cmd_levels_check,
        "serve-dir": _cmd_levels_serve_dir,
        "fixtures": _cmd_levels_fixtures,
    }
    try:
        if args.command == "levels":
            return level_handlers[args.levels_command](args)
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"graphfold: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
