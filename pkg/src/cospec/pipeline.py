"""Search, switch, verify and certify in one pass."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import SignedGraph, underlying_graph
from .errors import BudgetExceeded
from .ggm import ggm_switch, verify_conjugation_ggm
from .gm import GMPartition, format_gm_partition, gm_switch, verify_conjugation_gm
from .iso import ISO_MAX_N, are_switching_isomorphic
from .search import SearchLimits, find_ggm_partitions, find_gm_partitions
from .spectrum import graph_char_poly

__all__ = ["PairVerdict", "PipelineResult", "certify_pair", "run_pipeline"]


@dataclass
class PairVerdict:
    """Whether two cospectral candidates are switching isomorphic, and why we know."""

    switching_isomorphic: bool | None
    certified_by: str
    certificate: object = None


def certify_pair(a: SignedGraph, b: SignedGraph) -> PairVerdict:
    """Cheapest available argument for (non-)switching-isomorphism.

    Switching isomorphic graphs have isomorphic underlying graphs, so a
    difference in underlying spectrum or degree sequence settles it.
    Otherwise fall back to exhaustive search when the graph is small enough.
    """
    ua, ub = underlying_graph(a), underlying_graph(b)
    if graph_char_poly(ua) != graph_char_poly(ub):
        return PairVerdict(False, "underlying-spectrum")
    if sorted(a.degrees()) != sorted(b.degrees()):
        return PairVerdict(False, "degree-sequence")
    if a.n <= ISO_MAX_N:
        cert = are_switching_isomorphic(a, b)
        return PairVerdict(cert is not None, "exhaustive-search", cert)
    return PairVerdict(None, "undecided")


@dataclass
class PipelineResult:
    mode: str
    candidates: int
    truncated: bool
    pings: list[dict] = field(default_factory=list)
    others: list[dict] = field(default_factory=list)


def _describe(p):
    if isinstance(p, GMPartition):
        return {"partition": format_gm_partition(p), **p.to_dict()}
    return p.to_dict()


def run_pipeline(g: SignedGraph, mode: str, limits: SearchLimits | None = None, **search_kw) -> PipelineResult:
    """Find partitions, switch, re-verify cospectrality, and sort out PINGs.

    A PING here is a switched graph that is cospectral with ``g`` and
    provably not switching isomorphic to it.
    """
    if mode not in ("gm", "ggm"):
        raise ValueError(f"mode must be 'gm' or 'ggm', got {mode!r}")
    finder = find_gm_partitions if mode == "gm" else find_ggm_partitions
    truncated = False
    try:
        partitions = finder(g, limits, **search_kw)
    except BudgetExceeded as exc:
        partitions, truncated = exc.partial, True
    sw = gm_switch if mode == "gm" else ggm_switch
    check = verify_conjugation_gm if mode == "gm" else verify_conjugation_ggm
    poly = graph_char_poly(g)
    result = PipelineResult(mode, len(partitions), truncated)
    for p in partitions:
        h = sw(g, p)
        entry = _describe(p)
        entry["cospectral"] = graph_char_poly(h) == poly
        entry["conjugation_verified"] = check(g, p)
        verdict = certify_pair(g, h)
        entry["switching_isomorphic"] = verdict.switching_isomorphic
        entry["certified_by"] = verdict.certified_by
        if verdict.certificate is not None:
            entry["certificate"] = verdict.certificate.to_dict()
        if entry["cospectral"] and verdict.switching_isomorphic is False:
            result.pings.append(entry)
        else:
            result.others.append(entry)
    return result
