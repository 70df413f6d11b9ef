"""Command-line entry point.

Exit codes: 0 success, 1 invalid input, 2 invalid witness,
3 internal verification failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction
from pathlib import Path

from . import generators
from .burning import (
    BurningSchedule,
    ScheduleError,
    burning_number_exact,
    greedy_burning,
    reference_bounds,
    verify_schedule,
)
from .domination import (
    DEFAULT_EXACT_THRESHOLD,
    HopDomWitness,
    burn_via_mindeg,
    burn_via_weakdeg,
    connected_2hop_dominating,
    greedy_cds,
    nonleaf_cds,
    verify_hop_domination,
)
from .experiment import ConfigError, load_config, run_experiment, write_outputs
from .graph import Graph, GraphError, require_connected
from .io import FormatError, dumps, format_edge_list, load_domination_witness, load_schedule_witness, read_graph
from .reduction import MultiGraph, graph_value, reduce_to_core

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3


class InternalError(RuntimeError):
    pass


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path) -> Graph:
    g = read_graph(path)
    require_connected(g)
    return g


def cmd_generate(args) -> int:
    params = [int(p) for p in args.params]
    g = generators.build(args.family, params, args.seed)
    _emit(format_edge_list(g), args.out)
    return EXIT_OK


def cmd_burn(args) -> int:
    g = _load(args.graph)
    report = None
    try:
        if args.mode == "exact":
            _, sched = burning_number_exact(g)
        elif args.mode == "greedy":
            sched = greedy_burning(g)
        elif args.mode == "mindeg":
            sched, report = burn_via_mindeg(g, args.exact_threshold)
        else:
            sched, report = burn_via_weakdeg(g, args.epsilon, args.exact_threshold)
    except (AssertionError, ScheduleError) as exc:
        raise InternalError(str(exc)) from exc
    if not verify_schedule(g, sched):
        raise InternalError("emitted schedule failed verification")
    _emit(dumps(sched.to_json(g.n, True)), args.out)
    if args.report and report is not None:
        Path(args.report).write_text(dumps(report.to_json()))
    return EXIT_OK


def cmd_dominate(args) -> int:
    g = _load(args.graph)
    if args.mode == "2hop":
        w, trace = connected_2hop_dominating(g, args.start)
        if args.trace:
            with open(args.trace, "w", newline="") as fh:
                csv.writer(fh, lineterminator="\n").writerows(trace.to_csv_rows())
    elif args.mode == "cds-nonleaf":
        w = nonleaf_cds(g)
    else:
        w = greedy_cds(g)
    if not verify_hop_domination(g, w):
        raise InternalError("emitted dominating set failed verification")
    _emit(dumps(w.to_json(g.n, True)), args.out)
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _load(args.graph)
    core, trace = reduce_to_core(MultiGraph.from_graph(g))
    doc = {
        "n": g.n,
        "value": graph_value(core),
        "core": {"vertices": list(core.vertices), "edges": [list(e) for e in core.edge_list()]},
        "trace": trace.to_json(),
    }
    _emit(dumps(doc), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    text = Path(args.witness).read_text()
    if args.kind == "schedule":
        n, centers = load_schedule_witness(text)
        _check_witness_range(g, n, centers)
        ok = verify_schedule(g, BurningSchedule(centers))
    else:
        n, hops, vertices = load_domination_witness(text)
        _check_witness_range(g, n, vertices)
        ok = verify_hop_domination(g, HopDomWitness(frozenset(vertices), hops))
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_INVALID


def _check_witness_range(g, n, vertices) -> None:
    if n != g.n:
        raise FormatError(f"witness is for n={n}, graph has n={g.n}")
    bad = [v for v in vertices if not 0 <= v < g.n]
    if bad:
        raise FormatError(f"witness vertex {bad[0]} out of range")


def cmd_experiment(args) -> int:
    cfg = load_config(args.config)
    csv_text, witnesses = run_experiment(cfg, args.threads)
    out = Path(args.out) if args.out else None
    write_outputs(cfg, csv_text, witnesses, out)
    if out is None and cfg.out is None:
        sys.stdout.write(csv_text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    _emit(dumps(reference_bounds(args.n, args.k).to_json()), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for random families")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--threads", type=int, default=None, help="worker processes for experiments")
    common.add_argument("--exact-threshold", type=int, default=DEFAULT_EXACT_THRESHOLD,
                        help="largest subgraph burned with the exact solver")
    common.add_argument("--epsilon", type=Fraction, default=Fraction(1, 2),
                        help="epsilon for the weak-degree pipeline, e.g. 0.2 or 1/5")

    parser = argparse.ArgumentParser(prog="burnkit", description="Graph burning and domination toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="write a generated graph as an edge list")
    p.add_argument("family", choices=sorted(generators.FAMILIES))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("burn", parents=[common], help="compute a burning schedule")
    p.add_argument("mode", choices=["exact", "greedy", "mindeg", "weakdeg"])
    p.add_argument("graph")
    p.add_argument("--report", help="write the pipeline report JSON here")
    p.set_defaults(func=cmd_burn)

    p = sub.add_parser("dominate", parents=[common], help="compute a connected hop-dominating set")
    p.add_argument("mode", choices=["2hop", "cds-nonleaf", "cds-greedy"])
    p.add_argument("graph")
    p.add_argument("--start", type=int, default=None, help="start vertex for 2hop")
    p.add_argument("--trace", help="write the 2hop growth trace CSV here")
    p.set_defaults(func=cmd_dominate)

    p = sub.add_parser("reduce", parents=[common], help="reduce to a core and print the trace")
    p.add_argument("graph")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", parents=[common], help="check a witness file against a graph")
    p.add_argument("kind", choices=["schedule", "domset"])
    p.add_argument("graph")
    p.add_argument("witness")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", parents=[common], help="run a config grid into a CSV")
    p.add_argument("config")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("bounds", parents=[common], help="closed-form reference values for n and k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"burnkit: internal verification failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (FormatError, GraphError, ConfigError, ValueError, OSError) as exc:
        print(f"burnkit: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
