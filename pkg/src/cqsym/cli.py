"""Command-line front end: graph ingestion, expansion computation,
verification suites, family constructors, and report emission.

Exit codes: 0 success, 1 usage/parse failure, 2 non-symmetric input where a
symmetric basis was requested (witness pair printed), 3 bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .chromatic import (
    COLORING_CAP,
    PERM_CAP,
    brute_force_x,
    t_chromatic,
    x_via_f_theorem,
)
from .digraph import Digraph
from .errors import BoundExceededError, NotSymmetricError
from .families import (
    ArcFamily,
    CircularIntervalSet,
    arcs_from_intervals,
    complete_acyclic,
    complete_double,
    directed_cycle,
    directed_path,
    from_arcs,
    from_circular_intervals,
    g_c,
)
from .qsym import to_monomial_symmetric
from .sym import convert
from .verify import SUITES, run_all, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_SYMMETRIC = 2
EXIT_BOUNDS = 3

HARD_COLORING_CAP = COLORING_CAP
HARD_PERM_CAP = PERM_CAP


@dataclass
class JobSpec:
    """Resolved run parameters for one command invocation."""

    fmt: str = "text"
    max_n: int | None = None
    unsafe: bool = False

    def cap(self, hard: int) -> int:
        if self.max_n is None:
            return hard
        if self.unsafe:
            return self.max_n
        return min(self.max_n, hard)


def _load_graph(args) -> Digraph:
    raw = _load_payload(args)
    return Digraph.from_json(raw)


def _load_payload(args):
    if getattr(args, "inline", None):
        return json.loads(args.inline)
    source = getattr(args, "input", None)
    if source is None:
        raise ValueError("provide --input FILE or --inline JSON")
    if source == "-":
        return json.load(sys.stdin)
    with open(source) as fh:
        return json.load(fh)


def _emit(obj, fmt: str):
    if fmt == "json":
        print(json.dumps(obj.to_json(), sort_keys=True))
    elif fmt == "latex":
        print(obj.latex())
    else:
        print(obj)


def cmd_compute(args) -> int:
    spec = JobSpec(fmt=args.format, max_n=args.max_n, unsafe=args.unsafe_bounds)
    try:
        d = _load_graph(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.basis == "F":
            result = x_via_f_theorem(d, cap=spec.cap(HARD_PERM_CAP))
        else:
            x = brute_force_x(d, cap=spec.cap(HARD_COLORING_CAP))
            if args.basis == "M":
                result = x
            else:
                result = convert(to_monomial_symmetric(x), args.basis)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUNDS
    except NotSymmetricError as exc:
        print(
            f"error: X is not symmetric; witness {exc.alpha} vs {exc.beta}",
            file=sys.stderr,
        )
        return EXIT_NOT_SYMMETRIC
    _emit(result, spec.fmt)
    return EXIT_OK


def cmd_chromatic(args) -> int:
    try:
        d = _load_graph(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        poly = t_chromatic(d, args.m)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUNDS
    _emit(poly, args.format)
    return EXIT_OK


def cmd_family(args) -> int:
    name = args.name
    params = args.params
    try:
        if name == "path":
            d = directed_path(int(params[0]))
        elif name == "cycle":
            d = directed_cycle(int(params[0]))
        elif name == "complete":
            d = complete_acyclic(int(params[0]))
        elif name == "complete-double":
            d = complete_double(int(params[0]))
        elif name == "gc":
            d = g_c(int(params[0]), int(params[1]))
        elif name == "intervals":
            d = from_circular_intervals(CircularIntervalSet.from_json(_load_payload(args)))
        elif name == "arcs":
            d = from_arcs(ArcFamily.from_json(_load_payload(args)))
        elif name == "arcs-from-intervals":
            arcs = arcs_from_intervals(CircularIntervalSet.from_json(_load_payload(args)))
            print(json.dumps(arcs.to_json(), sort_keys=True))
            return EXIT_OK
        else:
            print(f"error: unknown family {name!r}", file=sys.stderr)
            return EXIT_USAGE
    except (ValueError, IndexError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(d.to_json(), sort_keys=True))
    return EXIT_OK


def _bounds_from_args(args) -> dict:
    bounds = {}
    for key in ("max_n", "seed", "samples", "random_count", "family_n", "max_k", "family"):
        value = getattr(args, key, None)
        if value is not None:
            bounds[key] = value
    if getattr(args, "exhaustive", False):
        bounds["exhaustive"] = True
    return bounds


def _print_results(results, fmt: str) -> bool:
    ok = all(r.passed for r in results)
    if fmt == "json":
        print(
            json.dumps(
                {"passed": ok, "results": [r.to_json() for r in results]},
                sort_keys=True,
            )
        )
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.suite}/{r.name}  ({r.checked} checks)"
            print(line)
            if not r.passed and r.detail is not None:
                print(f"      counterexample: {json.dumps(r.detail, sort_keys=True)}")
        print(f"{'OK' if ok else 'FAILED'}: {sum(r.passed for r in results)}/{len(results)} items")
    return ok


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        print(
            f"error: unknown suite {args.suite!r}; available: {', '.join(sorted(SUITES))}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    results = run_suite(args.suite, _bounds_from_args(args), jobs=args.jobs)
    return EXIT_OK if _print_results(results, args.format) else EXIT_USAGE


def cmd_report(args) -> int:
    results = run_all(jobs=args.jobs)
    ok = all(r.passed for r in results)
    payload = {"passed": ok, "results": [r.to_json() for r in results]}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
    _print_results(results, args.format)
    return EXIT_OK if ok else EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cqsym",
        description="Exact chromatic quasisymmetric functions of directed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("--input", help="graph JSON file ('-' for stdin)")
        p.add_argument("--inline", help="graph JSON given inline")
        p.add_argument(
            "--format", choices=("text", "json", "latex"), default="text"
        )

    p = sub.add_parser("compute", help="expand X in a chosen basis")
    add_io(p)
    p.add_argument("--basis", choices=("M", "F", "e", "p"), required=True)
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--unsafe-bounds", action="store_true", dest="unsafe_bounds")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("chromatic", help="t-analog chromatic polynomial chi(m, t)")
    add_io(p)
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("family", help="construct a named digraph family")
    p.add_argument(
        "name",
        help="path | cycle | complete | complete-double | gc | intervals | arcs | arcs-from-intervals",
    )
    p.add_argument("params", nargs="*", help="numeric parameters, e.g. 'gc 4 3'")
    p.add_argument("--input", help="JSON file for intervals/arcs ('-' for stdin)")
    p.add_argument("--inline", help="JSON given inline")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument("suite", help=", ".join(sorted(SUITES)))
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--max-k", type=int, dest="max_k")
    p.add_argument("--family-n", type=int, dest="family_n")
    p.add_argument("--family", choices=("gc", "cycle", "path"))
    p.add_argument("--random-count", type=int, dest="random_count")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="run the full verification battery")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="also write the JSON report to this file")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
