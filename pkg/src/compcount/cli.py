"""Command-line frontend for every counter, triangle, series, and graph tool.

All numeric output is decimal strings, so counts of any magnitude survive
serialization unchanged. Exit codes: 0 success, 1 domain error, 2 usage
error, 3 resource-guard error.
"""

import argparse
import csv
import json
import sys

from . import compositions, graphcomp, series, verify
from .compositions import PartBounds
from .errors import ResourceLimitError
from .graphcomp import GraphParseError

TRIANGLE_KIND_FLAGS = {
    "pi": compositions.PARTITIONS_DISTINCT,
    "cdistinct": compositions.COMPOSITIONS_DISTINCT,
}
FAMILY_FLAGS = {
    "path": "path",
    "tree": "tree",
    "complete": "complete",
    "kminus": "complete_minus_edge",
    "cycle": "cycle",
    "ladder": "ladder",
}


class UsageError(Exception):
    """Bad flag combination that argparse alone cannot express."""


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain",
                        help="output format (default plain)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized verification")
    common.add_argument("--cap", type=int, default=graphcomp.DEFAULT_VERTEX_CAP,
                        help="vertex cap for the graph subset DP")

    parser = argparse.ArgumentParser(
        prog="compcount",
        description="Exact counting of integer compositions and graph compositions.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", help="composition counters")
    counters = count.add_subparsers(dest="subcommand", required=True)

    p = counters.add_parser("restricted", parents=[common],
                            help="k-part compositions with bounded parts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--min", type=int, default=0, dest="min_part")
    p.add_argument("--max", type=int, default=None, dest="max_part")

    p = counters.add_parser("distinct", parents=[common],
                            help="compositions into distinct nonzero parts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)

    p = counters.add_parser("leading", parents=[common],
                            help="compositions with the largest part first")
    p.add_argument("--mode", choices=("strict", "weak"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)

    for name, help_text in (("avoid", "compositions with no part equal to k"),
                            ("contain", "compositions with at least one part k")):
        p = counters.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    p = commands.add_parser("triangle", parents=[common],
                            help="rows of a distinct-part counting triangle")
    p.add_argument("--kind", choices=sorted(TRIANGLE_KIND_FLAGS), required=True)
    p.add_argument("--rows", type=int, required=True)

    p = commands.add_parser("series", parents=[common],
                            help="generating-function coefficients")
    p.add_argument("--family",
                   choices=("fstrict", "fweak", "avoid", "contain", "distinct-total"),
                   required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--order", type=int, required=True)

    graph = commands.add_parser("graph", help="graph composition counting")
    graphs = graph.add_subparsers(dest="subcommand", required=True)

    p = graphs.add_parser("count", parents=[common], help="count a graph from an edge-list file")
    p.add_argument("--file", required=True)

    p = graphs.add_parser("family", parents=[common], help="count a named graph family member")
    p.add_argument("--name", choices=sorted(FAMILY_FLAGS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit-graph", action="store_true", dest="emit_graph",
                   help="print the edge list instead of the count (plain format only)")

    p = commands.add_parser("verify", parents=[common], help="run the cross-check suites")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.add_argument("--max-n", type=int, default=10, dest="max_n")

    return parser


def _single(command: str, parameters: dict, value: int) -> dict:
    return {"command": command, "parameters": parameters, "values": [("0", str(value))]}


def _dispatch(args: argparse.Namespace) -> dict:
    command = args.command
    sub = getattr(args, "subcommand", None)

    if command == "count" and sub == "restricted":
        bounds = PartBounds(args.min_part, args.max_part)
        value = compositions.count_restricted(args.n, args.k, bounds)
        params = {"n": args.n, "k": args.k, "min": args.min_part, "max": args.max_part}
        return _single("count restricted", params, value)

    if command == "count" and sub == "distinct":
        if args.k is None:
            value = compositions.count_compositions_distinct_total(args.n)
        else:
            value = compositions.count_compositions_distinct(args.n, args.k)
        return _single("count distinct", {"n": args.n, "k": args.k}, value)

    if command == "count" and sub == "leading":
        if args.mode == "strict":
            if args.k is None:
                value = compositions.count_leading_strict_total(args.n)
            else:
                value = compositions.count_leading_strict(args.n, args.k)
        else:
            if args.k is None:
                value = compositions.leading_weak_total(args.n)
            else:
                value = compositions.count_leading_weak(args.n, args.k)
        return _single("count leading", {"mode": args.mode, "n": args.n, "k": args.k}, value)

    if command == "count" and sub == "avoid":
        return _single("count avoid", {"k": args.k, "n": args.n},
                       compositions.count_avoiding(args.n, args.k))

    if command == "count" and sub == "contain":
        return _single("count contain", {"k": args.k, "n": args.n},
                       compositions.count_containing(args.n, args.k))

    if command == "triangle":
        tri = compositions.triangle(TRIANGLE_KIND_FLAGS[args.kind], args.rows)
        values = [
            (f"{n}:{k}", str(entry))
            for n, row in enumerate(tri.rows)
            for k, entry in enumerate(row)
        ]
        return {
            "command": "triangle",
            "parameters": {"kind": args.kind, "rows": args.rows},
            "values": values,
            "triangle_rows": [[str(entry) for entry in row] for row in tri.rows],
        }

    if command == "series":
        if args.family == "distinct-total":
            if args.k is not None:
                raise UsageError("--k does not apply to the distinct-total series")
            expansion = series.gf_distinct_total(args.order)
        else:
            if args.k is None:
                raise UsageError(f"--k is required for the {args.family} series")
            builder = {
                "fstrict": series.gf_leading_strict,
                "fweak": series.gf_leading_weak,
                "avoid": series.gf_avoiding,
                "contain": series.gf_containing,
            }[args.family]
            expansion = builder(args.k).expand(args.order)
        values = [(str(n), str(c)) for n, c in enumerate(expansion.coefficients)]
        return {
            "command": "series",
            "parameters": {"family": args.family, "k": args.k, "order": args.order},
            "values": values,
        }

    if command == "graph" and sub == "count":
        with open(args.file, encoding="utf-8") as handle:
            graph = graphcomp.parse_edge_list(handle.read())
        value = graphcomp.reduce_and_count(graph, args.cap)
        return _single("graph count", {"file": args.file}, value)

    if command == "graph" and sub == "family":
        family = FAMILY_FLAGS[args.name]
        params = {"name": args.name, "n": args.n}
        if args.emit_graph:
            if args.format != "plain":
                raise UsageError("--emit-graph only supports the plain format")
            built = graphcomp.build_family(family, args.n)
            return {"command": "graph family", "parameters": params,
                    "text": graphcomp.format_edge_list(built)}
        return _single("graph family", params, graphcomp.family_count(family, args.n))

    if command == "verify":
        checks = verify.run_suite(args.suite, args.max_n, args.seed, args.cap)
        return {
            "command": "verify",
            "parameters": {"suite": args.suite, "max-n": args.max_n, "seed": args.seed},
            "checks": [
                {"name": name, "ok": ok, "detail": detail} for name, ok, detail in checks
            ],
        }

    raise UsageError(f"unhandled command {command!r}")


def _emit(record: dict, fmt: str, out) -> None:
    if "text" in record:
        out.write(record["text"])
        return

    if fmt == "json":
        json.dump(record_as_json(record), out, indent=2)
        out.write("\n")
        return

    if "checks" in record:
        _emit_checks(record, fmt, out)
        return

    if fmt == "plain":
        if "triangle_rows" in record:
            for row in record["triangle_rows"]:
                out.write(" ".join(row) + "\n")
        else:
            for _, value in record["values"]:
                out.write(value + "\n")
        return

    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["index", "value"])
    for index, value in record["values"]:
        writer.writerow([index, value])


def record_as_json(record: dict) -> dict:
    body: dict = {"command": record["command"], "parameters": record["parameters"]}
    if "checks" in record:
        body["checks"] = record["checks"]
        body["passed"] = sum(1 for c in record["checks"] if c["ok"])
        body["failed"] = sum(1 for c in record["checks"] if not c["ok"])
    else:
        body["values"] = [[index, value] for index, value in record["values"]]
    return body


def _emit_checks(record: dict, fmt: str, out) -> None:
    checks = record["checks"]
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["name", "ok"])
        for check in checks:
            writer.writerow([check["name"], "ok" if check["ok"] else "FAIL"])
        return
    params = record["parameters"]
    out.write(f"# verify suite={params['suite']} max-n={params['max-n']} seed={params['seed']}\n")
    for check in checks:
        if check["ok"]:
            out.write(f"ok   {check['name']}\n")
        else:
            out.write(f"FAIL {check['name']}: {check['detail']}\n")
    passed = sum(1 for c in checks if c["ok"])
    out.write(f"passed {passed}/{len(checks)} checks\n")


def run(argv: list[str], out=None, err=None) -> int:
    """Parse argv, execute, and return the exit code (no sys.exit)."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        record = _dispatch(args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except ResourceLimitError as exc:
        err.write(f"resource limit: {exc}\n")
        return 3
    except (GraphParseError, ValueError, ArithmeticError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    _emit(record, args.format, out)
    if "checks" in record and any(not c["ok"] for c in record["checks"]):
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
