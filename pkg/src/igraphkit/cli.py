"""Command-line front end.

Graphs are accepted inline as graph6, as a path to a file whose first
non-blank line is graph6, or as ``-`` for stdin.  All JSON output is
canonical (sorted keys, no whitespace), so identical invocations are
byte-identical.

Exit codes: 0 success, 1 certification/verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .graphs import Graph, GraphFormatError, emit_graph6, parse_graph6
from .recipes import (
    CertificationError,
    recipe_from_json,
    recipe_json_text,
    seed_basic,
    seed_block_graph,
    seed_cactus,
    seed_forest,
    seed_unicyclic,
    verify_recipe,
)
from .reconf import build_igraph, igraph_json_text
from .search import find_obstruction, outcome_json_text, search_seed


def _read_text(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            return fh.read()
    return spec


def _read_graph(spec: str) -> Graph:
    text = _read_text(spec)
    for line in text.splitlines() or [text]:
        line = line.strip()
        if line:
            return parse_graph6(line)
    raise GraphFormatError("no graph6 line found in input")


def _iset_label(s: tuple[int, ...]) -> str:
    return "{" + ",".join(str(v) for v in s) + "}"


def _skeleton_dot(ig) -> str:
    lines = ["graph skeleton {"]
    for j, s in enumerate(ig.catalog.isets):
        lines.append(f'  {j} [label="{_iset_label(s)}"];')
    for j, k in ig.skeleton.edges():
        x, y = ig.slides[(j, k)]
        lines.append(f'  {j} -- {k} [label="{x}->{y}"];')
    lines.append("}")
    return "\n".join(lines)


def _plain_dot(g: Graph) -> str:
    lines = ["graph g {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def _edges_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines)


def _parse_edges_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty edge list input")
    try:
        n = int(lines[0])
        edges = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
        if any(len(e) != 2 for e in edges):
            raise ValueError
        return Graph.from_edges(n, edges)  # type: ignore[arg-type]
    except ValueError as err:
        raise GraphFormatError(f"bad edge list input: {err}") from err


def _cmd_igraph(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    ig = build_igraph(g)
    if args.dot:
        print(_skeleton_dot(ig))
    else:
        print(igraph_json_text(ig))
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in ("complete", "hypercube", "cycle"):
        if args.arg is None:
            raise ValueError(f"construct {kind} needs an integer parameter")
        recipe = seed_basic(kind, int(args.arg))
    elif kind == "house":
        recipe = seed_basic("house")
    elif kind in ("forest", "blockgraph", "unicyclic", "cactus"):
        if args.arg is None:
            raise ValueError(f"construct {kind} needs a graph6 argument")
        h = _read_graph(args.arg)
        builder = {
            "forest": seed_forest,
            "blockgraph": seed_block_graph,
            "unicyclic": seed_unicyclic,
            "cactus": seed_cactus,
        }[kind]
        recipe = builder(h)
    else:
        raise ValueError(f"unknown construct kind {kind!r}")
    print(recipe_json_text(recipe))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    text = _read_text(args.recipe)
    try:
        data = json.loads(text)
        recipe = recipe_from_json(data)
    except (KeyError, TypeError, json.JSONDecodeError) as err:
        raise GraphFormatError(f"bad recipe file: {err}") from err
    verify_recipe(recipe)
    print(json.dumps({"ok": True}, sort_keys=True, separators=(",", ":")))
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("IGRAPHKIT_JOBS", "1"))
    outcome = search_seed(g, args.max_n, jobs=jobs)
    print(outcome_json_text(outcome))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    hit = find_obstruction(g)
    if hit is None:
        data: dict = {"obstruction": None}
    else:
        data = {"obstruction": hit[0], "vertices": list(hit[1])}
    print(json.dumps(data, sort_keys=True, separators=(",", ":")))
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    text = _read_text(args.graph)
    if args.source == "graph6":
        g = _read_graph(args.graph)
    else:
        g = _parse_edges_text(text)
    if args.to == "graph6":
        print(emit_graph6(g))
    elif args.to == "edges":
        print(_edges_text(g))
    else:
        print(_plain_dot(g))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="igraphkit",
        description="Reconfiguration graphs of minimum independent dominating sets.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("igraph", help="compute the reconfiguration graph of a seed")
    p.add_argument("graph", help="graph6 string, file, or - for stdin")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(fn=_cmd_igraph)

    p = sub.add_parser("construct", help="build a certified seed recipe")
    p.add_argument(
        "kind",
        choices=["complete", "hypercube", "cycle", "house", "forest", "blockgraph", "unicyclic", "cactus"],
    )
    p.add_argument("arg", nargs="?", help="integer parameter or graph6 input")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify", help="re-certify a recipe JSON file")
    p.add_argument("recipe", help="recipe JSON file, or - for stdin")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("search", help="bounded exhaustive seed search")
    p.add_argument("graph", help="target as graph6, file, or -")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("check", help="look for a known non-realizability obstruction")
    p.add_argument("graph", help="graph6 string, file, or -")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("export", help="convert between graph formats")
    p.add_argument("graph", help="input graph, file, or -")
    p.add_argument("--from", dest="source", choices=["graph6", "edges"], default="graph6")
    p.add_argument("--to", choices=["graph6", "edges", "dot"], required=True)
    p.set_defaults(fn=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    try:
        return args.fn(args)
    except CertificationError as err:
        print(f"certification failed: {err}", file=sys.stderr)
        return 1
    except (GraphFormatError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
