"""Command-line entry point: analyze, corpus, tables.

Exit status: 0 all checks pass, 1 some theorem check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .enumeration import DEFAULT_GUARD
from .families import FamilySpecError, corpus, generate_family
from .graph import EdgeListError
from .verify import CHECK_NAMES, jsonable, verify_graph
from .vectors import eulerian_row, macmahon_row


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flowtension", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="run every theorem check on one graph")
    a.add_argument("--graph", required=True, help="complete:n, cycle:n, path:n, star:n, bouquet:r, theta:a:b:c, file:PATH")
    a.add_argument("--checks", default="all", help="'all' or a comma-separated list of check names")
    a.add_argument("--kmax", type=int, default=3, help="reflexivity is verified up to this dilation")
    a.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    a.add_argument("--format", choices=("json", "table"), default="table")
    a.add_argument("--out", type=Path)

    c = sub.add_parser("corpus", help="sweep small connected graphs and named families")
    c.add_argument("--max-vertices", type=int, default=5)
    c.add_argument("--max-edges", type=int, default=8)
    c.add_argument("--no-multigraphs", action="store_true", help="simple graphs and named families only")
    c.add_argument("--kmax", type=int, default=3)
    c.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    c.add_argument("--out", type=Path, required=True)

    t = sub.add_parser("tables", help="print Eulerian and MacMahon number triangles")
    t.add_argument("--eulerian", type=int, metavar="N")
    t.add_argument("--macmahon", type=int, metavar="N")
    return parser


def _parse_checks(text: str, parser) -> list[str] | None:
    if text == "all":
        return None
    names = [s.strip() for s in text.split(",") if s.strip()]
    bad = [s for s in names if s not in CHECK_NAMES]
    if bad:
        parser.error(f"unknown check(s): {', '.join(bad)}; choose from {', '.join(CHECK_NAMES)}")
    return names


def _analyze(args, parser) -> int:
    try:
        g = generate_family(args.graph)
    except (FamilySpecError, EdgeListError, OSError) as exc:
        parser.error(str(exc))
    report = verify_graph(g, k_max=args.kmax, guard=args.guard, checks=_parse_checks(args.checks, parser), spec=args.graph)
    text = report.dumps() if args.format == "json" else report.table()
    if args.out:
        args.out.write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0 if report.ok else 1


def _corpus(args) -> int:
    args.out.mkdir(parents=True, exist_ok=True)
    summary = []
    failures = 0
    for i, (label, g) in enumerate(corpus(args.max_vertices, args.max_edges, multigraphs=not args.no_multigraphs)):
        report = verify_graph(g, k_max=args.kmax, guard=args.guard, spec=label)
        (args.out / f"{i:04d}.json").write_text(report.dumps() + "\n", encoding="utf-8")
        failures += bool(report.failed)
        summary.append({"index": i, "spec": label, "failed": report.failed,
                        "status": {k: v.status for k, v in report.checks.items()}})
        print(f"{i:4d} {label:40s} {'FAIL ' + ','.join(report.failed) if report.failed else 'ok'}")
    (args.out / "summary.json").write_text(json.dumps(jsonable(summary), indent=2) + "\n", encoding="utf-8")
    print(f"{len(summary)} graphs, {failures} with failures")
    return 1 if failures else 0


def _tables(args, parser) -> int:
    if args.eulerian is None and args.macmahon is None:
        parser.error("tables needs --eulerian N and/or --macmahon N")
    if args.eulerian is not None:
        if args.eulerian < 1:
            parser.error("--eulerian must be positive")
        print("Eulerian numbers A(n,i), i = 0..n (A(n,0) = A(n,n+1) = 0)")
        for n in range(1, args.eulerian + 1):
            print(f"  n={n}: " + " ".join(str(x) for x in eulerian_row(n)))
    if args.macmahon is not None:
        if args.macmahon < 1:
            parser.error("--macmahon must be positive")
        print("MacMahon numbers B(n,i), i = 0..n (B(n,0) = 0)")
        for n in range(1, args.macmahon + 1):
            print(f"  n={n}: " + " ".join(str(x) for x in macmahon_row(n)))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "analyze":
        return _analyze(args, parser)
    if args.command == "corpus":
        return _corpus(args)
    return _tables(args, parser)


if __name__ == "__main__":
    sys.exit(main())
