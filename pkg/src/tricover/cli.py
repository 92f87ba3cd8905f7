"""Command-line frontend.

Subcommands::

    construct  --family {G1|G2|G3|H1|H2|H3|T|H4} [--m M | --n N | --sizes a,b,c] --out PATH
    verify     --family ... [params] [--in PATH] [--format text|json]
    covering   --in PATH --pattern {K4-|K5-|K4|Kt:T|Kt-:T} [--vertex V|--all] [--format ...]
    koenig     --in PATH --sides PATH [--format ...]
    oracle     --n N --pattern P [--budget-nodes K] [--budget-seconds S] [--threads T]
    export     --in PATH --format {json|hg} [--out PATH]

Exit codes: 0 success / verified / covered / exhaustive; 1 verification or
covering failure (or non-exhaustive search); 2 usage error; 3 I/O or parse
error.  Diagnostics go to stderr, reports to stdout.

Text reports are key-sorted ``key = value`` lines with JSON-encoded values,
so the text and JSON renderings carry identical fields.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .constructions import FAMILIES, check_construction, construct, verify_claim
from .fileio import FormatError, dumps_json, load, parse_any, save, write_edge_list
from .hypergraphs import Graph, TriGraph
from .koenig import bipartite_edge_coloring
from .oracle import DEFAULT_SEED, exact_c2
from .patterns import builtin_pattern, covering_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _sizes_arg(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("sizes must be three comma-separated integers")
    return tuple(int(p) for p in parts)  # type: ignore[return-value]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricover",
        description="3-uniform hypergraph covering-threshold toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("construct", help="build a construction and write its edge-list file")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--m", type=int, help="parameter for H1/H2/H3")
    p.add_argument("--n", type=int, help="vertex count for H4")
    p.add_argument("--sizes", type=_sizes_arg, help="part sizes for T, e.g. 2,2,3")
    p.add_argument("--out", required=True)

    p = sub.add_parser("verify", help="verify a construction's claims (exit 0 iff they pass)")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--sizes", type=_sizes_arg)
    p.add_argument("--in", dest="infile", help="verify this file instead of a fresh construction")
    add_format(p)

    p = sub.add_parser("covering", help="per-vertex pattern covering report")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--pattern", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--vertex", help="vertex index, or the literal 'x' for the file's X marker")
    group.add_argument("--all", action="store_true", help="exit 0 iff every vertex is covered (default)")
    add_format(p)

    p = sub.add_parser("koenig", help="partition a bipartite graph's edges into Delta matchings")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--sides", required=True, help="file with two lines: side A indices, side B indices")
    add_format(p)

    p = sub.add_parser("oracle", help="exhaustively compute the covering threshold at small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help="accepted for reproducibility; the exhaustive search is deterministic")
    p.add_argument("--allow-large", action="store_true",
                   help="override the n <= 8 hard cap (requires a budget)")
    add_format(p)

    p = sub.add_parser("export", help="convert between the edge-list and JSON formats")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=("json", "hg"), required=True)
    p.add_argument("--out")
    return parser


def render_text(doc: dict) -> str:
    lines = [f"{key} = {json.dumps(doc[key], sort_keys=True)}" for key in sorted(doc)]
    return "\n".join(lines) + "\n"


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(doc))


def _resolve_vertex(token: str, H: TriGraph) -> int:
    if token == "x":
        if H.distinguished is None:
            raise FormatError("the input file marks no distinguished vertex (no X line)")
        return H.distinguished
    try:
        v = int(token)
    except ValueError:
        raise ValueError(f"bad vertex {token!r}: expected an index or 'x'") from None
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} out of range [0, {H.n})")
    return v


def _parse_sides_file(path: str) -> tuple[list[int], list[int]]:
    with open(path, encoding="utf-8") as fh:
        rows = [ln for ln in fh.read().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(rows) != 2:
        raise FormatError("sides file needs exactly two lines: side A indices, then side B")
    try:
        return [int(t) for t in rows[0].split()], [int(t) for t in rows[1].split()]
    except ValueError:
        raise FormatError("sides file lines must contain integers") from None


def _cmd_construct(args: argparse.Namespace) -> int:
    obj = construct(args.family, m=args.m, n=args.n, sizes=args.sizes)
    save(obj, args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.infile:
        obj = load(args.infile)
        report = check_construction(obj, args.family, m=args.m, n=args.n, sizes=args.sizes)
    else:
        report = verify_claim(args.family, m=args.m, n=args.n, sizes=args.sizes)
    _emit(report.to_dict(), args.format)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_covering(args: argparse.Namespace) -> int:
    obj = load(args.infile)
    if not isinstance(obj, TriGraph):
        raise FormatError("covering analysis needs a 3-graph input (HG 3 header)")
    pattern = builtin_pattern(args.pattern)
    report = covering_report(obj, pattern)
    _emit(report.to_dict(), args.format)
    if args.vertex is not None:
        v = _resolve_vertex(args.vertex, obj)
        return EXIT_OK if v not in report.uncovered else EXIT_FAIL
    return EXIT_OK if report.fully_covered else EXIT_FAIL


def _cmd_koenig(args: argparse.Namespace) -> int:
    obj = load(args.infile)
    if not isinstance(obj, Graph):
        raise FormatError("edge coloring needs a 2-graph input (HG 2 header)")
    side_a, side_b = _parse_sides_file(args.sides)
    coloring = bipartite_edge_coloring(obj, side_a, side_b)
    if args.format == "json":
        _emit(coloring.to_dict(), "json")
    else:
        lines = [f"DELTA {coloring.delta}"]
        for i, cls in enumerate(coloring.classes):
            lines.append(f"M {i}")
            for u, v in cls:
                lines.append(f"{u} {v}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    pattern = builtin_pattern(args.pattern)
    result = exact_c2(
        args.n,
        pattern,
        node_budget=args.budget_nodes,
        time_budget=args.budget_seconds,
        threads=args.threads,
        allow_large=args.allow_large,
    )
    if args.format == "json":
        _emit(result.to_dict(), "json")
    else:
        doc = result.to_dict()
        doc.pop("witness")
        out = render_text(doc)
        if result.witness is not None:
            out += "WITNESS\n" + write_edge_list(result.witness)
        sys.stdout.write(out)
    return EXIT_OK if result.exhaustive else EXIT_FAIL


def _cmd_export(args: argparse.Namespace) -> int:
    with open(args.infile, encoding="utf-8") as fh:
        obj = parse_any(fh.read())
    text = dumps_json(obj) if args.format == "json" else write_edge_list(obj)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


_DISPATCH = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "covering": _cmd_covering,
    "koenig": _cmd_koenig,
    "oracle": _cmd_oracle,
    "export": _cmd_export,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
