"""Command line interface: ``check``, ``bench`` and ``groebner``.

Exit codes: 0 answered, 2 parse error, 3 resource limit, 4 oracle
disagreement.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from dataclasses import dataclass, field

from .errors import ParseError, ResourceLimitError
from .oracle import groebner, oracle_contains_monomial
from .parser import read_ideal_file
from .polyring import format_poly
from .solver import Options, decide
from .stats import COUNTERS

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_DISAGREE = 4

STAT_NAMES = ("additions", "multiplications", "pseudo_divisions", "systems_created", "minpoly_calls")
CSV_HEADER = ("name", "answer", "seconds", "additions", "multiplications", "systems", "status")


@dataclass
class RunReport:
    answer: bool = None
    seconds: float = 0.0
    counters: dict = field(default_factory=dict)
    status: str = "ok"


def _parse_torus(text, ring):
    if text is None:
        return None
    names = [n.strip() for n in text.split(",") if n.strip()]
    unknown = [n for n in names if n not in ring.names]
    if unknown:
        raise ParseError(f"unknown variable {unknown[0]}", 0, 0)
    return tuple(sorted({ring.names.index(n) + 1 for n in names}))


def options_from_args(args, torus):
    jobs = 1 if args.deterministic else max(1, args.jobs)
    return Options(
        eager=not args.no_eager,
        jobs=jobs,
        timeout=args.timeout,
        max_systems=args.max_systems,
        torus_vars=torus,
        validate=args.expand_g,
        expand_g=args.expand_g,
    )


def run(ideal, options, tracer=None):
    """Solve one parsed ideal and return a :class:`RunReport`."""
    start = time.perf_counter()
    try:
        out = decide(ideal.polynomials, ideal.ring, options, tracer=tracer)
    except ResourceLimitError as exc:
        status = "oom" if exc.kind == "oom" else "timeout"
        return RunReport(None, time.perf_counter() - start, exc.stats or COUNTERS.snapshot(), status)
    except MemoryError:
        return RunReport(None, time.perf_counter() - start, COUNTERS.snapshot(), "oom")
    return RunReport(out.answer, time.perf_counter() - start, out.counters)


def cmd_check(args, out=sys.stdout):
    try:
        ideal = read_ideal_file(args.path)
        torus = _parse_torus(args.torus, ideal.ring) if args.torus is not None else ideal.torus
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    tracer = None
    if args.trace:
        names = ideal.ring.names

        def tracer(rec):
            print(rec.format(names), file=out, flush=True)

    report = run(ideal, options_from_args(args, torus), tracer)
    if report.status != "ok":
        print(f"resource limit: {report.status}", file=sys.stderr)
        return EXIT_LIMIT
    print(f"CONTAINS_MONOMIAL: {str(report.answer).lower()}", file=out)
    if args.stats:
        for name in STAT_NAMES:
            print(f"stat.{name}={report.counters.get(name, 0)}", file=out)
    if args.oracle:
        try:
            expected = oracle_contains_monomial(
                ideal.polynomials, torus_vars=torus, timeout=args.timeout
            )
        except ResourceLimitError:
            print("resource limit: oracle timeout", file=sys.stderr)
            return EXIT_LIMIT
        agrees = expected == report.answer
        print(f"ORACLE_AGREES: {str(agrees).lower()}", file=out)
        if not agrees:
            return EXIT_DISAGREE
    return EXIT_OK


def bench_rows(directory, options):
    entries = sorted(f for f in os.listdir(directory) if f.endswith(".ideal"))
    for name in entries:
        try:
            ideal = read_ideal_file(os.path.join(directory, name))
        except ParseError:
            yield (name, "", "0.000000", 0, 0, 0, "error")
            continue
        opts = Options(**{**options.__dict__, "torus_vars": ideal.torus or options.torus_vars})
        rep = run(ideal, opts)
        answer = "" if rep.answer is None else str(rep.answer).lower()
        c = rep.counters
        yield (
            name, answer, f"{rep.seconds:.6f}", c.get("additions", 0),
            c.get("multiplications", 0), c.get("systems_created", 0), rep.status,
        )


def cmd_bench(args, out=sys.stdout):
    options = options_from_args(args, None)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for row in bench_rows(args.dir, options):
            writer.writerow(row)
            fh.flush()
    print(f"wrote {args.out}", file=out)
    return EXIT_OK


def cmd_groebner(args, out=sys.stdout):
    try:
        ideal = read_ideal_file(args.path)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        basis = groebner(ideal.polynomials, args.order, args.timeout)
    except ResourceLimitError:
        print("resource limit: timeout", file=sys.stderr)
        return EXIT_LIMIT
    for g in basis:
        print(format_poly(g), file=out)
    return EXIT_OK


def _add_run_flags(p):
    p.add_argument("--deterministic", action="store_true", help="single worker, reproducible order")
    p.add_argument("--no-eager", action="store_true", help="triangulate fully before checking")
    p.add_argument("--timeout", type=float, default=None, metavar="SECS")
    p.add_argument("--max-systems", type=int, default=None, metavar="N")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.add_argument("--expand-g", action="store_true",
                   help="validate every system, expanding g for divisibility checks")


def build_parser():
    ap = argparse.ArgumentParser(prog="monocheck", description="Monomial containment for polynomial ideals.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether an ideal contains a monomial")
    p.add_argument("path")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--torus", default=None, metavar="NAMES",
                   help="comma separated variables whose product must be nonzero")
    _add_run_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="run every .ideal file in a directory")
    p.add_argument("dir")
    p.add_argument("out")
    _add_run_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("groebner", help="print a reduced Groebner basis")
    p.add_argument("path")
    p.add_argument("--order", choices=("lex", "deglex", "degrevlex"), default="lex")
    p.add_argument("--timeout", type=float, default=None)
    p.set_defaults(func=cmd_groebner)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
