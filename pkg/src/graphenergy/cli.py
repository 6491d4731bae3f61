"""Command-line interface.

Exit codes: 0 success (including certified-empty answers), 1 infeasible
input, 2 budget exhausted without a certificate, 3 format error.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from . import catalog, graph6, report
from .completion import (
    EmptySelectionError,
    InfeasibleError,
    best_candidates,
    complete_spectrum,
    format_table,
    format_value,
)
from .search import Budget, SearchResult, SearchSpec, extremal_energy, realize_spectrum
from .sessions import SessionError
from .spectra import PHI, eigenvalues, energy_report

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_BUDGET = 2
EXIT_FORMAT = 3

_SYMBOLS = {
    "phi": PHI,
    "-phi": -PHI,
    "phi-1": PHI - 1.0,
    "1-phi": 1.0 - PHI,
    "sqrt2": math.sqrt(2.0),
    "-sqrt2": -math.sqrt(2.0),
}


class FormatError(ValueError):
    pass


def parse_values(text: str) -> list[float]:
    """Comma list of values with optional :multiplicity, e.g. '15,-3:3,phi-1:4'."""
    out: list[float] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        mult = 1
        if ":" in token:
            token, mult_text = token.rsplit(":", 1)
            try:
                mult = int(mult_text)
            except ValueError:
                raise FormatError(f"bad multiplicity {mult_text!r}") from None
            if mult < 1:
                raise FormatError(f"multiplicity must be positive, got {mult}")
        low = token.lower()
        if low in _SYMBOLS:
            value = _SYMBOLS[low]
        else:
            try:
                value = float(token)
            except ValueError:
                raise FormatError(f"bad value {token!r}") from None
        out.extend([value] * mult)
    return out


def _spec_from_args(args, objective=None, target=None) -> SearchSpec:
    return SearchSpec(
        n=args.n,
        m=args.m,
        connected=args.connected,
        bipartite=args.bipartite,
        regular_degree=args.regular,
        tree=getattr(args, "tree", False),
        complement_cycles=args.complement_cycles,
        objective=objective,
        target=target,
        match_tol=getattr(args, "tol", 1e-6),
        budget=Budget(max_graphs=args.budget_graphs, max_seconds=args.budget_seconds),
    )


def _print_found(result: SearchResult) -> None:
    for f in result.best:
        groups = ", ".join(
            f"{format_value(v)}^{mult}" if mult > 1 else format_value(v)
            for v, mult in f.spectrum.groups()
        )
        print(f"{f.code}  energy={format_value(f.energy)}  spectrum: {groups}")


def cmd_complete(args) -> int:
    known = parse_values(args.known) if args.known else []
    cands = complete_spectrum(args.n, args.m, known, full_range=args.full_range)
    print(f"n={args.n} m={args.m} known={{{', '.join(format_value(v) for v in known)}}}")
    print(format_table(cands))
    if args.best:
        ordered = best_candidates(cands, which=args.filter, objective=args.best)
        top = ordered[0]
        print(
            f"best ({args.best}, {args.filter}): p={top.p} q={top.q} "
            f"x={format_value(top.x)} y={format_value(top.y)} "
            f"E={format_value(top.energy)}"
        )
    return EXIT_OK


def cmd_spectrum(args) -> int:
    g = graph6.decode(args.graph6)
    rep = energy_report(g)
    s = eigenvalues(g)
    print(f"graph6: {args.graph6}")
    print(f"n={g.n} m={g.m}")
    groups = ", ".join(
        f"{format_value(v)}^{mult}" if mult > 1 else format_value(v)
        for v, mult in s.groups()
    )
    print(f"spectrum: {groups}")
    print(f"energy: {format_value(rep.energy)}")
    print(
        f"moments: sum={rep.moment1:.3e}  sum sq={format_value(rep.moment2)}  "
        f"sum cubes={format_value(rep.moment3)}"
    )
    mark = "integral" if rep.triangle_integral else "NOT integral"
    print(f"triangles (third moment / 6): {format_value(rep.triangle_count)} ({mark})")
    print(
        f"energy bound: {format_value(rep.km_bound)}  slack: {format_value(rep.km_slack)}"
    )
    return EXIT_OK


def cmd_search(args) -> int:
    spec = _spec_from_args(args, objective=args.objective)
    result = extremal_energy(spec)
    print(f"examined {result.graphs_examined} candidates; exhausted={result.exhausted}")
    if result.empty_class:
        print("class is empty")
        return EXIT_OK
    _print_found(result)
    if not result.exhausted:
        print("budget exhausted: extremum not certified")
        return EXIT_BUDGET
    return EXIT_OK


def cmd_realize(args) -> int:
    target = parse_values(args.target)
    if len(target) != args.n:
        raise FormatError(f"target has {len(target)} values, expected n={args.n}")
    spec = _spec_from_args(args, objective="realize", target=tuple(target))
    result = realize_spectrum(spec)
    print(f"examined {result.graphs_examined} candidates; exhausted={result.exhausted}")
    for reason in result.fast_fail_reasons:
        print(f"certified unrealizable: {reason}")
    if result.best:
        _print_found(result)
        return EXIT_OK
    if result.exhausted:
        print("certified: no graph in the class has this spectrum")
        return EXIT_OK
    print("budget exhausted: existence not decided")
    return EXIT_BUDGET


def cmd_verify_tables(args) -> int:
    failures = 0
    for name, problems in catalog.verify_all():
        if problems:
            failures += 1
            print(f"FAIL {name}")
            for problem in problems:
                print(f"     {problem}")
        else:
            print(f"PASS {name}")
    if failures:
        print(f"{failures} verification(s) failed")
        return EXIT_INFEASIBLE
    print("all reference tables verified")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(session_dir=args.session_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def cmd_report(args) -> int:
    if args.kind == "complete":
        known = parse_values(args.known) if args.known else []
        cands = complete_spectrum(args.n, args.m, known)
        paths = report.completion_report(cands, args.n, args.m, known, args.out_dir)
    elif args.kind == "spectrum":
        g = graph6.decode(args.graph6)
        paths = report.spectrum_report(g, args.out_dir, label=args.graph6)
    else:
        paths = report.catalog_report(args.out_dir)
    for path in paths:
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphenergy",
        description="Find and verify graphs with extremal adjacency energy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument("--budget-graphs", type=int, default=10_000_000)
        p.add_argument("--budget-seconds", type=float, default=300.0)

    def add_constraints(p):
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--regular", type=int, default=None, metavar="DEGREE")
        p.add_argument("--bipartite", action="store_true")
        p.add_argument("--connected", action="store_true")
        p.add_argument("--complement-cycles", action="store_true")

    p = sub.add_parser("complete", help="print the two-value completion table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--known", default="", help="comma list, e.g. 15,-3:3,phi-1:4")
    p.add_argument("--full-range", action="store_true",
                   help="also print the (p,x)<->(q,y) mirrored rows")
    p.add_argument("--best", choices=["max", "min"], default=None)
    p.add_argument("--filter", choices=["all", "moment-pass-only"], default="all")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("spectrum", help="spectrum and energy of a graph6 code")
    p.add_argument("--graph6", required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("search", help="extremal energy over a graph class")
    p.add_argument("--n", type=int, required=True)
    add_constraints(p)
    p.add_argument("--tree", action="store_true")
    p.add_argument("--objective", choices=["max", "min"], required=True)
    add_budget(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("realize", help="find graphs with a target spectrum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", required=True, help="comma list, e.g. 3,sqrt2:6,-sqrt2:6,-3")
    add_constraints(p)
    p.add_argument("--tree", action="store_true")
    p.add_argument("--tol", type=float, default=1e-6)
    add_budget(p)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify-tables", help="re-derive all bundled reference results")
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("serve", help="run the REST exploration service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--session-dir", default=None)
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("report", help="write a CSV and figure for a computation")
    p.add_argument("kind", choices=["complete", "spectrum", "catalog"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--known", default="")
    p.add_argument("--graph6")
    p.add_argument("--out-dir", default="reports")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; report them as format errors
        return EXIT_FORMAT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except graph6.Graph6Error as exc:
        print(f"graph6 error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (InfeasibleError, EmptySelectionError, SessionError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ValueError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
