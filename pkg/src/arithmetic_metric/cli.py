"""
Command-line front end.  Every subcommand is a thin wrapper over one library
call; formatting is the only logic here.

Exit codes: 0 success, 1 invalid argument or usage error, 2 out of range,
3 a ``verify`` suite reported failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any

from . import analysis, extended, factor_core, hasse, index, metric, verification
from .errors import EmptyIndexError, InvalidArgumentError, OutOfRangeError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_OUT_OF_RANGE = 2
EXIT_VERIFY_FAILED = 3

FORMATS = ("plain", "json", "csv", "dot")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


@dataclass
class Output:
    """One command's result in every representation it supports."""

    command: str
    input: dict
    result: Any
    plain: str
    csv_header: list[str] | None = None
    csv_rows: list[list] = field(default_factory=list)
    dot: str | None = None
    exit_code: int = EXIT_OK


def _natural(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")


# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------


def _cmd_dist(args) -> Output:
    d = metric.dist(args.a, args.b)
    return Output("dist", {"a": args.a, "b": args.b}, d, str(d), ["a", "b", "dist"], [[args.a, args.b, d]])


def _cmd_factor(args) -> Output:
    f = factor_core.factor(args.n)
    pairs = [[p, e] for p, e in f]
    return Output("factor", {"n": args.n}, pairs, str(f), ["prime", "exponent"], pairs)


def _cmd_omega(args) -> Output:
    w = factor_core.big_omega(args.n)
    return Output("omega", {"n": args.n}, w, str(w), ["n", "omega"], [[args.n, w]])


def _cmd_ball(args) -> Output:
    ball = analysis.closed_ball(args.x, args.r, args.max)
    return Output(
        "ball",
        {"x": args.x, "r": args.r, "max": args.max},
        ball,
        " ".join(map(str, ball)),
        ["value"],
        [[v] for v in ball],
    )


def _cmd_diameter(args) -> Output:
    formula = analysis.diameter_formula(args.n)
    if not args.brute:
        return Output("diameter", {"n": args.n}, {"diameter": formula}, str(formula),
                      ["n", "diameter"], [[args.n, formula]])
    value, (x, y) = analysis.diameter_bruteforce(args.n)
    result = {"diameter": value, "witness": [x, y], "formula": formula}
    return Output(
        "diameter",
        {"n": args.n, "brute": True},
        result,
        f"{value} witness ({x}, {y}) formula {formula}",
        ["n", "diameter", "x", "y", "formula"],
        [[args.n, value, x, y, formula]],
    )


def _cmd_hasse(args) -> Output:
    g = hasse.build_hasse(args.n)
    edges = [list(e) for e in g.edges()]
    plain = f"vertices {g.num_vertices}\nedges {g.num_edges}\n" + "\n".join(f"{a} {b}" for a, b in edges)
    out = Output(
        "hasse",
        {"n": args.n},
        {"vertices": g.num_vertices, "edges": edges},
        plain.rstrip("\n"),
        ["a", "b"],
        edges,
        dot=hasse.export_dot(g),
    )
    return out


def _cmd_census(args) -> Output:
    rows = analysis.census_table(args.n, args.kmax)
    plain = ["k count estimate(approx) ratio(approx)"]
    for row in rows:
        est = "-" if row["estimate"] is None else f"~{row['estimate']:.1f}"
        ratio = "-" if row["ratio"] is None else f"~{row['ratio']:.4f}"
        plain.append(f"{row['k']} {row['count']} {est} {ratio}")
    return Output(
        "census",
        {"n": args.n, "kmax": args.kmax},
        {"rows": rows, "approximate": ["estimate", "ratio"]},
        "\n".join(plain),
        ["k", "count", "estimate", "ratio"],
        [[r["k"], r["count"], _blank(r["estimate"]), _blank(r["ratio"])] for r in rows],
    )


def _blank(v):
    return "" if v is None else repr(v)


def _cmd_xi(args) -> Output:
    v = analysis.xi(args.p, args.s)
    return Output("xi", {"p": args.p, "s": args.s}, v, str(v), ["p", "s", "xi"], [[args.p, args.s, v]])


def _load_index(path) -> index.BkIndex:
    return index.BkIndex(index.load_corpus(path))


def _cmd_nn(args) -> Output:
    idx = _load_index(args.corpus)
    pairs = [[v, d] for v, d in idx.nearest(args.x, args.k)]
    return Output(
        "nn",
        {"x": args.x, "k": args.k, "corpus": args.corpus},
        pairs,
        "\n".join(f"{v} {d}" for v, d in pairs),
        ["value", "distance"],
        pairs,
    )


def _cmd_range(args) -> Output:
    idx = _load_index(args.corpus)
    found = idx.range(args.x, args.r)
    return Output(
        "range",
        {"x": args.x, "r": args.r, "corpus": args.corpus},
        found,
        " ".join(map(str, found)),
        ["value"],
        [[v] for v in found],
    )


def _cmd_ext_dist(args) -> Output:
    x = extended.parse_extended(args.x)
    y = extended.parse_extended(args.y)
    d = extended.format_fraction(extended.ext_dist(x, y))
    return Output("ext-dist", {"x": args.x, "y": args.y}, d, d, ["x", "y", "dist"], [[args.x, args.y, d]])


def _cmd_verify(args) -> Output:
    names = [args.suite] if args.suite else list(verification.SUITES)
    unknown = [n for n in names if n not in verification.SUITES]
    if unknown:
        raise InvalidArgumentError(
            f"unknown suite {unknown[0]!r}; choose from {', '.join(verification.SUITES)}"
        )
    results = verification.run_all(seed=args.seed, names=names, samples=args.samples)
    rows = [[r.name, "pass" if r.passed else "fail", r.checks, r.failed] for r in results]
    lines = [f"{status.upper()} {name}: {checks - failed}/{checks}" for name, status, checks, failed in rows]
    failed_suites = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - failed_suites} passed, {failed_suites} failed")
    return Output(
        "verify",
        {"suite": args.suite, "seed": args.seed, "samples": args.samples},
        {
            "suites": [
                {"name": r.name, "passed": r.passed, "checks": r.checks, "failed": r.failed,
                 "examples": [repr(e) for e in r.examples]}
                for r in results
            ],
            "passed": len(results) - failed_suites,
            "failed": failed_suites,
        },
        "\n".join(lines),
        ["suite", "status", "checks", "failed"],
        rows,
        exit_code=EXIT_VERIFY_FAILED if failed_suites else EXIT_OK,
    )


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=FORMATS, default=default("plain"))
    parser.add_argument("--pretty", action="store_true", default=default(False),
                        help="indent JSON output")
    parser.add_argument("--sieve-limit", type=_natural, default=default(None),
                        help="limit of the shared smallest-prime-factor sieve")
    parser.add_argument("--seed", type=_natural, default=default(0),
                        help="seed for the PCG64 generator used by verify")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arithmetic-metric", description="Arithmetic metric toolkit.")
    _global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("dist", _cmd_dist, "distance d(a, b)")
    p.add_argument("a", type=_natural)
    p.add_argument("b", type=_natural)

    p = add("factor", _cmd_factor, "prime factorization")
    p.add_argument("n", type=_natural)

    p = add("omega", _cmd_omega, "number of prime factors with multiplicity")
    p.add_argument("n", type=_natural)

    p = add("ball", _cmd_ball, "closed ball within 1..max")
    p.add_argument("x", type=_natural)
    p.add_argument("r", type=_natural)
    p.add_argument("--max", type=_natural, required=True)

    p = add("diameter", _cmd_diameter, "diameter of 1..n")
    p.add_argument("n", type=_natural)
    p.add_argument("--brute", action="store_true", help="also scan all pairs")

    p = add("hasse", _cmd_hasse, "covering graph of 1..n")
    p.add_argument("n", type=_natural)
    p.add_argument("--dot", action="store_true", help="emit DOT (same as --format dot)")

    p = add("census", _cmd_census, "k-almost-prime counts against the asymptotic estimate")
    p.add_argument("n", type=_natural)
    p.add_argument("--kmax", type=_natural, default=None)

    p = add("xi", _cmd_xi, "largest k with p**k <= s")
    p.add_argument("p", type=_natural)
    p.add_argument("s", type=_natural)

    p = add("nn", _cmd_nn, "k nearest neighbours in a corpus")
    p.add_argument("x", type=_natural)
    p.add_argument("k", type=_natural)
    p.add_argument("--corpus", required=True, help="newline-delimited integers")

    p = add("range", _cmd_range, "corpus values within distance r")
    p.add_argument("x", type=_natural)
    p.add_argument("r", type=_natural)
    p.add_argument("--corpus", required=True, help="newline-delimited integers")

    p = add("ext-dist", _cmd_ext_dist, "distance between num/den or root(k, num/den) literals")
    p.add_argument("x")
    p.add_argument("y")

    p = add("verify", _cmd_verify, "run seeded property suites")
    p.add_argument("--suite", default=None, help="one of: " + ", ".join(verification.SUITES))
    p.add_argument("--samples", type=_natural, default=None, help="override suite sample size")
    return parser


def render(out: Output, fmt: str, pretty: bool = False) -> str:
    if fmt == "json":
        payload = {"command": out.command, "input": out.input, "result": out.result}
        if pretty:
            return json.dumps(payload, indent=2) + "\n"
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(out.csv_header)
        writer.writerows(out.csv_rows)
        return buf.getvalue()
    if fmt == "dot":
        if out.dot is None:
            raise InvalidArgumentError(f"--format dot is only supported by 'hasse', not {out.command!r}")
        return out.dot
    return out.plain + "\n"


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_INVALID
    if args.command is None:
        parser.print_usage(stderr)
        return EXIT_INVALID
    fmt = "dot" if getattr(args, "dot", False) else args.format
    try:
        if args.sieve_limit is not None:
            factor_core.set_default_sieve_limit(args.sieve_limit)
        out = args.handler(args)
        text = render(out, fmt, args.pretty)
    except (InvalidArgumentError, EmptyIndexError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except OutOfRangeError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_OUT_OF_RANGE
    stdout.write(text)
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
