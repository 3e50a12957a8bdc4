"""Command-line interface.

Machine output is line-delimited JSON on stdout; ``--pretty`` renders
human tables instead.  Every subcommand accepts ``--out FILE`` to
persist a run record (see data/run_record.schema.json).

Exit codes: 0 success, 1 verification or table mismatch, 2 usage error,
3 time limit hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from . import __version__, graph6, reference
from .constructions import (
    InvalidTError,
    MissingComponentError,
    assemble,
    b_graph,
    d_star,
    extremal_component,
    general_extremal,
)
from .formula import (
    Instance,
    UnknownCaseError,
    UnknownZError,
    f_delta,
    f_gen,
    precomputed_ub,
    z_of,
)
from .graphs import Graph, is_factor_critical, is_triangle_free, matching_number
from .knapsack import solve_knapsack
from .search import (
    METHODS,
    STATUS_TIME_LIMIT,
    SolverConfig,
    solve,
)
from .symmetry import ColoredModel, orbits

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_TIME_LIMIT = 3


def _emit(payload: dict, pretty_lines: list[str] | None, pretty: bool) -> None:
    if pretty and pretty_lines is not None:
        print("\n".join(pretty_lines))
    else:
        print(json.dumps(payload, sort_keys=True))


def _write_record(path: str | None, command: str, config: dict, result: dict) -> None:
    if not path:
        return
    record = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "command": command,
        "config": config,
        "result": result,
        "version": __version__,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(record, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _graph_report(g: Graph, d: int, m: int | None) -> dict:
    report = {
        "n": g.n,
        "edges": g.edge_count(),
        "triangle_free": is_triangle_free(g),
        "max_degree": g.max_degree(),
        "matching_number": matching_number(g),
        "factor_critical": is_factor_critical(g),
    }
    report["degree_ok"] = report["max_degree"] <= d
    if m is not None:
        report["matching_ok"] = report["matching_number"] <= m
        try:
            expected = f_delta(d, m)
            report["f_delta"] = expected
            report["edges_match_f_delta"] = report["edges"] == expected
        except (UnknownCaseError, UnknownZError):
            report["f_delta"] = None
    return report


def cmd_formula(args: argparse.Namespace) -> int:
    z = z_of(args.d)
    payload: dict = {
        "d": args.d,
        "m": args.m,
        "f_gen": f_gen(args.d, args.m),
        "precomputed_ub": precomputed_ub(args.d, args.m),
        "z": {"exact": z.is_exact, "lo": z.lo, "hi": z.hi},
    }
    try:
        payload["f_delta"] = f_delta(args.d, args.m, args.assume_conjecture)
    except (UnknownCaseError, UnknownZError) as exc:
        payload["f_delta"] = None
        payload["f_delta_error"] = str(exc)
    lines = [f"{k} = {v}" for k, v in sorted(payload.items())]
    _emit(payload, lines, args.pretty)
    _write_record(args.out, "formula", vars_of(args), payload)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        if args.family == "star":
            g = d_star(args.d)
            m = 1
        elif args.family == "general":
            g = general_extremal(args.d, args.m)
            m = args.m
        elif args.family == "bgraph":
            g = b_graph(args.d, args.t)
            m = args.d + args.t
        else:  # component
            g = extremal_component(args.d, args.m)
            m = args.m
    except (InvalidTError, MissingComponentError, UnknownZError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = graph6.to_graph6(g).decode("ascii")
    payload = {"family": args.family, "graph6": code,
               "report": _graph_report(g, args.d, m)}
    if args.graph_out:
        with open(args.graph_out, "wb") as fh:
            fh.write(graph6.to_graph6(g) + b"\n")
    lines = [f"graph6: {code}"] + [
        f"{k} = {v}" for k, v in sorted(payload["report"].items())
    ]
    _emit(payload, lines, args.pretty)
    _write_record(args.out, "construct", vars_of(args), payload)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    inst = Instance(args.d, args.m)
    cfg = SolverConfig(
        method=args.method,
        time_limit_s=args.time_limit,
        orbit_depth_cutoff=_parse_orbit_depth(args.orbit_depth),
        workers=args.workers,
        deterministic=args.deterministic,
        seed=args.seed,
    )
    result = solve(inst, cfg)
    payload = {"d": args.d, "m": args.m, "method": args.method,
               **result.to_dict()}
    lines = [
        f"lb = {result.lb}",
        f"ub = {result.ub}",
        f"status = {result.status}",
        f"nodes = {result.stats.nodes}",
        f"wall_s = {result.stats.wall_s:.2f}",
        f"orbit_s = {result.stats.orbit_s:.2f}",
    ]
    _emit(payload, lines, args.pretty)
    _write_record(args.out, "solve", vars_of(args), payload)
    if args.graph_out and result.incumbent is not None:
        with open(args.graph_out, "wb") as fh:
            fh.write(graph6.to_graph6(result.incumbent) + b"\n")
    return EXIT_TIME_LIMIT if result.status == STATUS_TIME_LIMIT else EXIT_OK


def cmd_knapsack(args: argparse.Namespace) -> int:
    z = z_of(args.d)
    if not z.is_exact:
        print(f"error: Z({args.d}) unknown", file=sys.stderr)
        return EXIT_USAGE
    utilities = {
        i: f_delta(args.d, i, args.assume_conjecture)
        for i in range(args.d, z.value + 1)
    }
    plan = solve_knapsack(args.d, args.m, utilities)
    payload = {
        "d": plan.d,
        "m": plan.m,
        "edges": plan.objective,
        "stars": plan.star_count,
        "counts": {str(i): x for i, x in sorted(plan.counts.items())},
    }
    if args.emit_graph:
        components = {
            i: extremal_component(args.d, i)
            for i, x in plan.counts.items()
            if x > 0
        }
        g = assemble(plan, components)
        with open(args.emit_graph, "wb") as fh:
            fh.write(graph6.to_graph6(g) + b"\n")
        payload["graph_file"] = args.emit_graph
        payload["graph_edges"] = g.edge_count()
    lines = [f"{k} = {v}" for k, v in sorted(payload.items())]
    _emit(payload, lines, args.pretty)
    _write_record(args.out, "knapsack", vars_of(args), payload)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    with open(args.graph_file, "rb") as fh:
        g = graph6.from_graph6(fh.read())
    report = _graph_report(g, args.d, args.m)
    ok = (
        report["triangle_free"]
        and report["degree_ok"]
        and report.get("matching_ok", True)
        and report.get("edges_match_f_delta", True) is not False
    )
    payload = {"graph_file": args.graph_file, "d": args.d, "m": args.m,
               "ok": ok, "report": report}
    lines = [f"{k} = {v}" for k, v in sorted(report.items())] + [f"ok = {ok}"]
    _emit(payload, lines, args.pretty)
    _write_record(args.out, "verify", vars_of(args), payload)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_table(args: argparse.Namespace) -> int:
    try:
        result = reference.compute_table(args.name)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {"name": args.name, "rows": len(result["rows"]),
               "mismatches": result["mismatches"]}
    if args.pretty:
        header = sorted(
            k for k in result["rows"][0] if k not in ("expected", "match")
        )
        lines = ["\t".join(header)]
        for row in result["rows"]:
            lines.append("\t".join(str(row[k]) for k in header))
        lines.append(f"mismatches: {len(result['mismatches'])}")
        print("\n".join(lines))
    else:
        for row in result["rows"]:
            print(json.dumps(row, sort_keys=True))
        print(json.dumps(payload, sort_keys=True))
    _write_record(args.out, "table", vars_of(args),
                  {**payload, "rows_detail": result["rows"]})
    return EXIT_OK if not result["mismatches"] else EXIT_MISMATCH


def cmd_orbits(args: argparse.Namespace) -> int:
    fixed_one = [tuple(map(int, s.split(","))) for s in args.one]
    fixed_zero = [tuple(map(int, s.split(","))) for s in args.zero]
    colors = None
    if args.colors:
        colors = [int(c) for c in args.colors.split(",")]
    model = ColoredModel(args.n, colors, fixed_one, fixed_zero)
    part = orbits(model)
    payload = {
        "n": args.n,
        "classes": len(part.classes),
        "sizes": part.class_sizes(),
        "representatives": [list(p) for p in part.representatives],
    }
    lines = [f"classes = {payload['classes']}", f"sizes = {payload['sizes']}"]
    _emit(payload, lines, args.pretty)
    _write_record(args.out, "orbits", vars_of(args), payload)
    return EXIT_OK


def vars_of(args: argparse.Namespace) -> dict:
    return {k: v for k, v in vars(args).items() if k != "func"}


def _parse_orbit_depth(text: str):
    if text in ("adaptive", "off"):
        return text
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifree",
        description="Edge-extremal triangle-free graphs under degree and "
        "matching bounds",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write a run-record JSON to this path")
        p.add_argument("--pretty", action="store_true",
                       help="human-readable output instead of JSON")

    p = sub.add_parser("formula", help="closed-form values as JSON")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--assume-conjecture", action="store_true")
    common(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="emit a witness graph")
    p.add_argument("family", choices=("star", "general", "bgraph", "component"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, help="matching bound (general/component)")
    p.add_argument("--t", type=int, default=0, help="matching offset (bgraph)")
    p.add_argument("--graph-out", help="write graph6 to this path")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("solve", help="run the branch-and-bound solver")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="iterative-orbital")
    p.add_argument("--time-limit", type=float, default=None,
                   help=f"seconds (default: $TRIFREE_TIME_LIMIT or 3600)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--deterministic", action="store_true", default=True)
    p.add_argument("--orbit-depth", default="adaptive",
                   help="adaptive, off, or a fixed depth")
    p.add_argument("--seed", type=int, default=None,
                   help="reserved; the search is deterministic")
    p.add_argument("--graph-out", help="write the incumbent graph6 here")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("knapsack", help="optimal component composition")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--assume-conjecture", action="store_true")
    p.add_argument("--emit-graph", help="assemble and write graph6 here")
    common(p)
    p.set_defaults(func=cmd_knapsack)

    p = sub.add_parser("verify", help="re-check a graph6 file")
    p.add_argument("graph_file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="reproduce a bundled result table")
    p.add_argument("name", choices=reference.TABLE_NAMES)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("orbits", help="debug: orbit classes of a model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--one", action="append", default=[],
                   help="pair fixed to one, as 'u,v' (repeatable)")
    p.add_argument("--zero", action="append", default=[],
                   help="pair fixed to zero, as 'u,v' (repeatable)")
    p.add_argument("--colors", help="comma-separated vertex colors")
    common(p)
    p.set_defaults(func=cmd_orbits)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct":
        if args.family in ("general", "component") and args.m is None:
            parser.error("--m is required for this family")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
