"""``cospec`` command line.

Every command writes one JSON document to stdout.  Exit status: 0 on
success, 1 when the input is rejected on mathematical grounds (partition
not admissible, graphs not cospectral), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .core import SignedGraph, adjacency_matrix
from .errors import BudgetExceeded, CospecError, NotAdmissible, ParseError
from .ggm import GGMPartition, ggm_switch, validate_ggm, verify_conjugation_ggm
from .gm import format_gm_partition, gm_switch, parse_gm_partition, validate_gm, verify_conjugation_gm
from .graphio import format_graph, read_graph, write_graph
from .iso import are_switching_isomorphic, underlying_isomorphic
from .pipeline import run_pipeline
from .search import (
    SearchLimits,
    find_ggm_partitions,
    find_gm_partitions,
    generate_ggm_instance,
    generate_gm_instance,
)
from .spectrum import eigenvalues_approx, graph_char_poly

EXIT_OK, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2
DEFAULT_BUDGET = 30.0


@dataclass
class RunReport:
    command: list[str]
    inputs: dict[str, str] = field(default_factory=dict)
    result: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK

    def to_json(self) -> str:
        doc = {"command": self.command, "inputs": self.inputs, "exit_code": self.exit_code}
        doc.update(self.result)
        return json.dumps(doc, indent=2)


def _budget(args) -> float:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("COSPEC_BUDGET_SECS")
    if env:
        try:
            return float(env)
        except ValueError as exc:
            raise ParseError(f"COSPEC_BUDGET_SECS must be a number, got {env!r}") from exc
    return DEFAULT_BUDGET


def _load(path, report: RunReport) -> SignedGraph:
    g = read_graph(path)
    report.inputs[str(path)] = hashlib.sha256(Path(path).read_bytes()).hexdigest()
    return g


def _verbose(args, text):
    if args.verbose:
        print(text, file=sys.stderr)


def _ids(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ParseError(f"expected comma-separated vertex ids, got {text!r}") from exc


def cmd_spectrum(args, report):
    g = _load(args.graph, report)
    poly = graph_char_poly(g)
    report.result = {
        "n": g.n,
        "char_poly": poly.to_strings(),
        "eigenvalues_approx": eigenvalues_approx(adjacency_matrix(g)),
    }
    _verbose(args, f"p(x) = {poly}")


def _emit_switched(args, report, g, h, extra):
    poly = graph_char_poly(g)
    switched_poly = graph_char_poly(h)
    report.result.update(extra)
    report.result.update(
        char_poly=poly.to_strings(),
        switched_char_poly=switched_poly.to_strings(),
        cospectral=poly == switched_poly,
        graph=format_graph(h),
    )
    if args.output:
        write_graph(h, args.output)
        report.result["output"] = str(args.output)
    if poly != switched_poly:
        report.exit_code = EXIT_REJECTED
    _verbose(args, format_graph(h))


def cmd_gm(args, report):
    g = _load(args.graph, report)
    pi = parse_gm_partition(args.partition, g.n)
    rep = validate_gm(g, pi)
    report.result = rep.to_dict()
    if not rep.admissible:
        report.exit_code = EXIT_REJECTED
        _verbose(args, f"not admissible: {rep.violation}")
        return
    h = gm_switch(g, pi, rep)
    _emit_switched(args, report, g, h, {"conjugation_verified": verify_conjugation_gm(g, pi)})


def cmd_ggm(args, report):
    g = _load(args.graph, report)
    p = GGMPartition.infer(g.n, _ids(args.v1), _ids(args.v2))
    rep = validate_ggm(g, p)
    report.result = rep.to_dict()
    if not rep.admissible:
        report.exit_code = EXIT_REJECTED
        _verbose(args, f"not admissible: {rep.violation}")
        return
    h = ggm_switch(g, p, rep)
    _emit_switched(args, report, g, h, {"conjugation_verified": verify_conjugation_ggm(g, p)})


def cmd_search(args, report):
    g = _load(args.graph, report)
    limits = SearchLimits(t_max=args.t_max, time_budget=_budget(args))
    truncated = False
    try:
        if args.mode == "gm":
            found = find_gm_partitions(g, limits, nontrivial=not args.all)
        else:
            found = find_ggm_partitions(g, limits, sizes=args.m, nontrivial=not args.all)
    except BudgetExceeded as exc:
        found, truncated = exc.partial, True
    items = []
    for p in found:
        d = p.to_dict()
        if args.mode == "gm":
            d["partition"] = format_gm_partition(p)
        items.append(d)
    report.result = {"mode": args.mode, "count": len(items), "truncated": truncated, "partitions": items}
    for d in items:
        _verbose(args, json.dumps(d))


def cmd_gen(args, report):
    if args.mode == "gm":
        sizes = _ids(args.sizes) if args.sizes else None
        g, p = generate_gm_instance(
            args.seed, part_sizes=sizes, d_size=args.d, edge_density=args.density,
            sign_bias=args.sign_bias, require_half=args.require_half,
        )
        part = {"partition": format_gm_partition(p), **p.to_dict()}
    else:
        g, p = generate_ggm_instance(
            args.seed, m=args.m, d_size=args.d, edge_density=args.density, sign_bias=args.sign_bias
        )
        part = p.to_dict()
    write_graph(g, args.output)
    report.result = {"mode": args.mode, "seed": args.seed, "n": g.n, "output": str(args.output), **part}


def cmd_iso(args, report):
    a = _load(args.graph_a, report)
    b = _load(args.graph_b, report)
    if args.underlying:
        report.result = {"underlying": True, "isomorphic": underlying_isomorphic(a, b)}
        return
    cert = are_switching_isomorphic(a, b)
    report.result = {"underlying": False, "isomorphic": cert is not None}
    if cert is not None:
        report.result["certificate"] = cert.to_dict()


def cmd_verify(args, report):
    a = _load(args.graph_a, report)
    b = _load(args.graph_b, report)
    pa, pb = graph_char_poly(a), graph_char_poly(b)
    report.result = {"char_poly_a": pa.to_strings(), "char_poly_b": pb.to_strings(), "cospectral": pa == pb}
    if pa != pb:
        report.exit_code = EXIT_REJECTED
    _verbose(args, f"p_a(x) = {pa}\np_b(x) = {pb}")


def cmd_pipeline(args, report):
    g = _load(args.graph, report)
    limits = SearchLimits(t_max=args.t_max, time_budget=_budget(args))
    kw = {"sizes": args.m} if args.mode == "ggm" and args.m else {}
    res = run_pipeline(g, args.mode, limits, **kw)
    report.result = {
        "mode": res.mode,
        "candidates": res.candidates,
        "truncated": res.truncated,
        "pings": res.pings,
    }
    for ping in res.pings:
        _verbose(args, f"PING via {ping.get('partition', ping)} ({ping['certified_by']})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cospec", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="human-readable notes on stderr")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("spectrum", help="exact characteristic polynomial of a graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("gm", help="signed GM switching with a given partition")
    p.add_argument("graph")
    p.add_argument("--partition", required=True, help='e.g. "C:0,1,2 C:3,4,5,6 D:7"')
    p.add_argument("-o", "--output", help="also write the switched graph here")
    p.set_defaults(func=cmd_gm)

    p = sub.add_parser("ggm", help="signed generalized GM switching with given V1, V2")
    p.add_argument("graph")
    p.add_argument("--v1", required=True)
    p.add_argument("--v2", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ggm)

    p = sub.add_parser("search", help="find admissible partitions")
    p.add_argument("mode", choices=["gm", "ggm"])
    p.add_argument("graph")
    p.add_argument("--t-max", type=int, default=3)
    p.add_argument("--m", type=int, action="append", help="G-GM side size (repeatable)")
    p.add_argument("--budget", type=float, help="seconds (default $COSPEC_BUDGET_SECS or 30)")
    p.add_argument("--all", action="store_true", help="keep partitions that switch to the same graph")
    p.add_argument("--json", action="store_true", help="accepted for compatibility; output is always JSON")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gen", help="generate a random admissible instance")
    p.add_argument("mode", choices=["gm", "ggm"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--sizes", help="gm: comma-separated C part sizes")
    p.add_argument("--m", type=int, default=2, help="ggm: side size")
    p.add_argument("--d", type=int, default=2, help="size of D / rest")
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--sign-bias", type=float, default=0.5)
    p.add_argument("--require-half", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("iso", help="switching isomorphism test (n <= 12)")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    p.add_argument("--underlying", action="store_true", help="compare underlying graphs only")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("verify", help="exact cospectrality check")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pipeline", help="search, switch, verify and report PINGs")
    p.add_argument("graph")
    p.add_argument("--mode", choices=["gm", "ggm"], required=True)
    p.add_argument("--t-max", type=int, default=3)
    p.add_argument("--m", type=int, action="append")
    p.add_argument("--budget", type=float)
    p.set_defaults(func=cmd_pipeline)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    report = RunReport(command=["cospec", *argv])
    try:
        args.func(args, report)
    except (NotAdmissible, BudgetExceeded) as exc:
        print(f"cospec: rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except (CospecError, ValueError) as exc:
        print(f"cospec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.to_json())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
