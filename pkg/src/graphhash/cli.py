"""Command-line interface.

Exit status: 0 for success / equal / isomorphic, 1 for unequal /
non-isomorphic, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .coder import graph_hash, vertex_codes
from .fileformat import ParseError, dedupe, read_graph, serialize_graph
from .graph import random_graph, scramble
from .iso import MATCHERS, OracleCapExceeded

EXIT_OK, EXIT_DIFFERENT, EXIT_ERROR = 0, 1, 2


class _Fail(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _Fail(f"{path}: {exc.strerror or exc}") from exc
    try:
        return read_graph(text)
    except ParseError as exc:
        raise _Fail(f"{path}: {exc}") from exc


def cmd_hash(args) -> int:
    g, _ = _load(args.file)
    print(graph_hash(g, not args.structural).hex())
    return EXIT_OK


def cmd_vertex_codes(args) -> int:
    g, ids = _load(args.file)
    codes = vertex_codes(g)
    for v, vid in enumerate(ids):
        print(f"{vid}\t{codes[v].hex()}")
    return EXIT_OK


def cmd_eq(args) -> int:
    g1, _ = _load(args.file1)
    g2, _ = _load(args.file2)
    h1 = graph_hash(g1, not args.structural)
    h2 = graph_hash(g2, not args.structural)
    print(h1.hex())
    print(h2.hex())
    return EXIT_OK if h1 == h2 else EXIT_DIFFERENT


def cmd_iso(args) -> int:
    g1, ids1 = _load(args.file1)
    g2, ids2 = _load(args.file2)
    try:
        result = MATCHERS[args.method](g1, g2)
    except OracleCapExceeded as exc:
        raise _Fail(str(exc)) from exc
    if not result.found:
        print("not isomorphic")
        return EXIT_DIFFERENT
    for a, b in sorted(result.mapping.items()):
        print(f"{ids1[a]}->{ids2[b]}")
    return EXIT_OK


def cmd_gen(args) -> int:
    g = random_graph(args.vertices, args.edges, args.directed, args.label_range, args.seed)
    sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def cmd_scramble(args) -> int:
    g, _ = _load(args.file)
    sys.stdout.write(serialize_graph(scramble(g, args.seed)))
    return EXIT_OK


def cmd_dedupe(args) -> int:
    docs = []
    status = EXIT_OK
    for name in args.files:
        try:
            docs.append((name, Path(name).read_text()))
        except OSError as exc:
            print(f"{name}: {exc.strerror or exc}", file=sys.stderr)
            status = EXIT_ERROR
    groups, errors = dedupe(docs, not args.structural)
    for name, exc in errors:
        print(f"{name}: {exc}", file=sys.stderr)
        status = EXIT_ERROR
    for grp in groups:
        print(" ".join([grp.hash.hex(), *grp.members]))
    return status


def cmd_bench(args) -> int:
    try:
        settings = [bench.BenchSetting.parse(s, args.trials, args.seed) for s in args.settings.split(",")]
    except ValueError as exc:
        raise _Fail(f"bad --settings: {exc}") from exc
    report = bench.run_benchmark(settings)
    sys.stdout.write(report.to_table())
    return EXIT_OK if report.ok else EXIT_DIFFERENT


def cmd_tipping_point(args) -> int:
    try:
        n = bench.tipping_point(args.ullmann, args.hash, args.cmp)
    except ValueError as exc:
        raise _Fail(str(exc)) from exc
    print("never" if n is None else n)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphhash", description="MD5 graph hashing and isomorphism tools")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hash", help="print the graph hash")
    s.add_argument("--structural", action="store_true", help="ignore labels")
    s.add_argument("file")
    s.set_defaults(func=cmd_hash)

    s = sub.add_parser("vertex-codes", help="print the structural code of each vertex")
    s.add_argument("file")
    s.set_defaults(func=cmd_vertex_codes)

    s = sub.add_parser("eq", help="compare two graphs by hash")
    s.add_argument("--structural", action="store_true")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("iso", help="test two graphs for isomorphism")
    s.add_argument("--method", choices=sorted(MATCHERS), default="hash")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("gen", help="generate a random graph")
    s.add_argument("--vertices", type=int, required=True)
    s.add_argument("--edges", type=int, required=True)
    s.add_argument("--directed", action="store_true")
    s.add_argument("--label-range", type=int, default=None)
    s.add_argument("--seed", type=int, required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("scramble", help="write an isomorphic clone with shuffled orderings")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("file")
    s.set_defaults(func=cmd_scramble)

    s = sub.add_parser("dedupe", help="group files by graph hash")
    s.add_argument("--structural", action="store_true")
    s.add_argument("files", nargs="*")
    s.set_defaults(func=cmd_dedupe)

    s = sub.add_parser("bench", help="time hashing against Ullmann")
    s.add_argument("--settings", required=True, help="comma-separated V/E pairs, e.g. 10/100,20/400")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("tipping-point", help="exemplar count beyond which hashing wins")
    s.add_argument("--ullmann", type=float, required=True)
    s.add_argument("--hash", type=float, required=True)
    s.add_argument("--cmp", type=float, required=True)
    s.set_defaults(func=cmd_tipping_point)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"graphhash {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        # generator argument errors
        print(f"graphhash {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
