"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error (bad parameters, disconnected network), 4 the ``reduce``
method met a network that is not series-parallel.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import formulas as fm
from .graph import (
    GraphError,
    build_gmnp,
    build_kmn_over_matching,
    build_kmn_over_tree,
    complete_bipartite,
    complete_graph,
)
from .graphio import GraphFormatError, format_graph, format_rational, parse_graph
from .resistance import (
    DisconnectedError,
    NotSeriesParallelError,
    effective_resistance,
    effective_resistance_tau,
    kirchhoff_index,
    series_parallel_reduce,
)
from .spanning import tau, tau_containing
from .verify import DEFAULT_SEED, SUITES, run_verification

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN, EXIT_NOT_SP = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


GENERATORS = {
    "kn": (complete_graph, 1),
    "kmn": (complete_bipartite, 2),
    "gmnp": (build_gmnp, 3),
    "kmn-over-matching": (build_kmn_over_matching, 3),
    "kmn-over-tree": (build_kmn_over_tree, 4),
}

FORMULAS = {
    "cayley": (fm.cayley, 1),
    "kmn": (fm.tau_kmn, 2),
    "matching": (fm.tau_matching, 3),
    "tree": (fm.tau_tree, 4),
    "gmnp": (fm.tau_gmnp, 3),
    "kf-gmnp": (fm.kf_gmnp, 3),
    "kf-shi-chen": (fm.kf_shi_chen, 2),
    "ratio-matching": (fm.ratio_matching, 3),
    "ratio-tree": (fm.ratio_tree_t, 4),
    "ratio-tree-s": (fm.ratio_tree_s, 4),
}


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    return parse_graph(text)


def _ints(values, count, what):
    if count is not None and len(values) != count:
        raise UsageError(f"{what} takes {count} integer parameter(s), got {len(values)}")
    try:
        return [int(v) for v in values]
    except ValueError:
        raise UsageError(f"{what}: parameters must be integers") from None


def cmd_gen(args) -> int:
    fn, arity = GENERATORS[args.kind]
    g = fn(*_ints(args.params, arity, args.kind))
    sys.stdout.write(format_graph(g, comment=f"{args.kind} {' '.join(args.params)}"))
    return EXIT_OK


def cmd_tau(args) -> int:
    g = _read_graph(args.input)
    if args.containing:
        try:
            edges = [int(x) for x in args.containing.split(",") if x.strip()]
        except ValueError:
            raise UsageError("--containing expects comma-separated edge indices") from None
        value = tau_containing(g, edges)
    else:
        value = tau(g)
    print(format_rational(value))
    return EXIT_OK


def cmd_resist(args) -> int:
    g = _read_graph(args.input)
    g.check_vertex(args.u)
    g.check_vertex(args.v)
    if args.method == "reduce":
        value, trace = series_parallel_reduce(g, args.u, args.v)
        print(format_rational(value))
        if args.trace:
            for step in trace:
                before = ",".join(format_rational(r) for r in step.before)
                after = "-" if step.after is None else format_rational(step.after)
                verts = ",".join(map(str, step.vertices))
                print(f"# {step.rule} at {verts}: {before} -> {after}")
        return EXIT_OK
    fn = effective_resistance if args.method == "solve" else effective_resistance_tau
    print(format_rational(fn(g, args.u, args.v)))
    return EXIT_OK


def cmd_kf(args) -> int:
    print(format_rational(kirchhoff_index(_read_graph(args.input))))
    return EXIT_OK


def cmd_formula(args) -> int:
    name = args.name
    if name == "moon":
        vals = _ints(args.params, None, name)
        if not vals:
            raise UsageError("moon takes n followed by component orders")
        print(format_rational(fm.moon_forest(vals[0], vals[1:])))
        return EXIT_OK
    if name == "r-table":
        table = fm.gmnp_resistances(*_ints(args.params, 3, name))
        for key, value in table.items():
            print(f"{key} = {'n/a' if value is None else format_rational(value)}")
        return EXIT_OK
    if name not in FORMULAS:
        raise UsageError(f"unknown formula {name!r}; choose from {', '.join(sorted([*FORMULAS, 'moon', 'r-table']))}")
    fn, arity = FORMULAS[name]
    print(format_rational(fn(*_ints(args.params, arity, name))))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_m < 2 or args.max_n < 2:
        raise UsageError("--max-m and --max-n must be >= 2")
    report = run_verification(args.suite, args.max_m, args.max_n, args.jobs, args.seed, args.graphs)
    for name, (ok, total) in report.summary().items():
        print(f"{'PASS' if ok == total else 'FAIL'} {name}: {ok}/{total}")
    for rec in report.failures:
        print(
            f"MISMATCH {rec.name} params={rec.params} expected={format_rational(rec.expected)} "
            f"actual={format_rational(rec.actual)}"
        )
    if args.verbose:
        for rec in report.records:
            print(f"  {rec.name} {rec.params} {format_rational(rec.actual)}")
    total = len(report.records)
    print(f"{total - len(report.failures)}/{total} checks passed")
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spantree",
        description="Exact spanning-tree counts and effective resistances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph file to standard output")
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("tau", help="weighted spanning-tree count")
    p.add_argument("input", help="graph file, or - for standard input")
    p.add_argument("--containing", help="comma-separated edge indices every tree must contain")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("resist", help="effective resistance between two vertices")
    p.add_argument("input")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--method", choices=("solve", "tau", "reduce"), default="solve")
    p.add_argument("--trace", action="store_true", help="print the reduction steps (reduce method)")
    p.set_defaults(func=cmd_resist)

    p = sub.add_parser("kf", help="Kirchhoff index")
    p.add_argument("input")
    p.set_defaults(func=cmd_kf)

    p = sub.add_parser("formula", help="evaluate a closed form")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="cross-check closed forms against the oracles")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--graphs", type=int, default=100, help="size of the random corpus for the laws suite")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotSeriesParallelError as exc:
        print(f"error: not series-parallel: {exc}", file=sys.stderr)
        return EXIT_NOT_SP
    except (fm.FormulaDomainError, GraphError, DisconnectedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
