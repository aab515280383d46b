"""Command-line entry point.  JSON goes to stdout, diagnostics to stderr.

Exit codes: 0 success (a verdict was delivered), 1 usage or input error,
2 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Callable, Iterator, Sequence

from . import __version__
from .constructions import (CASES, FAMILIES, FamilySpec, NotRealizable, ParameterError,
                            build_family, solve_block_star, build_block_star)
from .generate import EnvelopeError
from .graph import SimpleGraph
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .packing import max_disjoint_cycles
from .reduction import minimal_base, strip_leaves
from .saturation import saturation_status
from .spectrum import RecordError, saturation_spectrum

OK, USAGE, FAILED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this tool reserves 2 for failed verification
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _emit(payload: dict, stream=None) -> None:
    (stream or sys.stdout).write(json.dumps(payload, separators=(",", ":")) + "\n")


def _inputs(arg: str) -> Iterator[tuple[int, str]]:
    if arg == "-":
        for i, line in enumerate(sys.stdin, 1):
            if line.strip():
                yield i, line.rstrip("\r\n")
    else:
        yield 0, arg


def _per_graph(arg: str, handle: Callable[[SimpleGraph], dict]) -> int:
    """Apply ``handle`` to each input graph; bad lines are reported and skipped."""
    status = OK
    for line_no, text in _inputs(arg):
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            where = f"line {line_no}: " if line_no else ""
            print(f"{where}malformed graph6 at byte {exc.position}: {exc}", file=sys.stderr)
            if line_no:
                _emit({"line": line_no, "error": str(exc), "position": exc.position})
            status = USAGE
            continue
        _emit(handle(g))
    return status


def _cmd_check(args) -> int:
    if args.k < 1:
        raise ParameterError("-k must be at least 1")
    return _per_graph(args.graph6, lambda g: saturation_status(g, args.k).to_json())


def _cmd_packing(args) -> int:
    def handle(g: SimpleGraph) -> dict:
        count, packing = max_disjoint_cycles(g)
        return {"graph6": emit_graph6(g), "count": count, "packing": packing.to_json()}
    return _per_graph(args.graph6, handle)


def _cmd_reduce(args) -> int:
    def handle(g: SimpleGraph) -> dict:
        leafless, _ = strip_leaves(g)
        base, trace = minimal_base(g)
        return {"graph6": emit_graph6(g), "leafless": emit_graph6(leafless),
                "base": emit_graph6(base), "kept": list(trace.kept), "trace": trace.to_json()}
    return _per_graph(args.graph6, handle)


def _cmd_build(args) -> int:
    g = build_family(FamilySpec(args.family, tuple(args.params)))
    print(emit_graph6(g))
    return OK


def _cmd_construct(args) -> int:
    try:
        case, spec = solve_block_star(args.n, args.k, args.m, args.case)
    except NotRealizable as exc:
        print(f"NotRealizable: {exc}")
        return OK
    g = build_block_star(spec)
    if args.json:
        _emit({"graph6": emit_graph6(g), "case": case, "blocks": spec.to_json()})
    else:
        print(emit_graph6(g))
    return OK


def _cmd_spectrum(args) -> int:
    record = saturation_spectrum(args.n, args.k, jobs=args.jobs, use_cache=not args.no_cache,
                                 pruned=args.pruned)
    sys.stdout.write(record.dumps())
    return OK


def _cmd_verify(args) -> int:
    from .verify import verify_theorems

    report = verify_theorems(args.n_max, args.k, jobs=args.jobs, use_cache=not args.no_cache)
    sys.stdout.write(json.dumps(report.to_json(), indent=2) + "\n")
    for c in report.failures:
        print(f"FAIL {c.name} n={c.n} k={c.k}: {c.detail} [{c.counterexample}]", file=sys.stderr)
    return OK if report.passed else FAILED


def build_parser() -> argparse.ArgumentParser:
    jobs_default = len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
    p = _Parser(prog="satspec", description="Exact tools for graphs saturated for k disjoint cycles.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="saturation verdict with certificates")
    c.add_argument("-k", type=int, required=True)
    c.add_argument("graph6", help="graph6 string, or - to read lines from stdin")
    c.set_defaults(run=_cmd_check)

    c = sub.add_parser("packing", help="maximum set of vertex-disjoint cycles")
    c.add_argument("graph6")
    c.set_defaults(run=_cmd_packing)

    c = sub.add_parser("reduce", help="leafless core, minimal base and trace")
    c.add_argument("graph6")
    c.set_defaults(run=_cmd_reduce)

    c = sub.add_parser("build", help="build a named family")
    c.add_argument("--family", required=True, choices=sorted(FAMILIES))
    c.add_argument("--params", type=int, nargs="+", required=True)
    c.set_defaults(run=_cmd_build)

    c = sub.add_parser("construct", help="saturated block-star with a given size")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--case", choices=CASES)
    c.add_argument("--json", action="store_true", help="also print the block multiset")
    c.set_defaults(run=_cmd_construct)

    c = sub.add_parser("spectrum", help="exhaustive size spectrum for (n, k)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--jobs", type=int, default=jobs_default)
    c.add_argument("--pruned", action="store_true", help="skip graphs ruled out by connectivity")
    c.add_argument("--no-cache", action="store_true")
    c.set_defaults(run=_cmd_spectrum)

    c = sub.add_parser("verify", help="run the structural check suite")
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--k", type=int, nargs="+", default=[2])
    c.add_argument("--jobs", type=int, default=jobs_default)
    c.add_argument("--no-cache", action="store_true")
    c.set_defaults(run=_cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.run(args)
    except (ParameterError, EnvelopeError, RecordError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
