"""Signed generalized Godsil-McKay switching.

The vertex set splits as ``V_1 | V_2 | rest`` with ``|V_1| = |V_2| = m``.
Admissibility asks for a constant ``ell`` with

    net(v, V_1) - net(v, V_2) = ell   for v in V_1
    net(u, V_2) - net(u, V_1) = ell   for u in V_2

and for each rest vertex one of: fully positive (or fully negative) to one
side and silent on the other, equal net-degree to both sides, or fully
positive to one side and fully negative to the other.  Switching is
conjugation by ``diag(U_2m, I_d)`` where
``U_2m = I_2m + (1/m) [[-J, J], [J, -J]]``.  Any ``m >= 1`` works.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable

import numpy as np

from . import exact
from .core import SignedGraph, adjacency_matrix, build_graph
from .errors import NotAdmissible, NotAPartition, SizeMismatch

__all__ = [
    "GGMPartition",
    "GGMVertexCase",
    "GGMReport",
    "classify_rest_vertex",
    "rest_column_image",
    "validate_ggm",
    "ggm_switch",
    "build_u",
    "verify_conjugation_ggm",
    "difference_sums",
    "n_blocks",
]


class GGMVertexCase(enum.Enum):
    FULL_POS_1 = "FullPos1"
    FULL_POS_2 = "FullPos2"
    FULL_NEG_1 = "FullNeg1"
    FULL_NEG_2 = "FullNeg2"
    EQUAL = "Equal"
    FULL_MIXED_12 = "FullMixed12"  # positive to V_1, negative to V_2
    FULL_MIXED_21 = "FullMixed21"  # negative to V_1, positive to V_2


@dataclass(frozen=True)
class GGMPartition:
    v1: tuple[int, ...]
    v2: tuple[int, ...]
    rest: tuple[int, ...] = ()
    ell: int | None = field(default=None, compare=False)

    def __post_init__(self):
        for name in ("v1", "v2", "rest"):
            object.__setattr__(self, name, tuple(sorted(int(v) for v in getattr(self, name))))

    @classmethod
    def infer(cls, n: int, v1: Iterable[int], v2: Iterable[int]) -> "GGMPartition":
        """Partition with ``rest`` = every vertex not in ``v1`` or ``v2``."""
        v1, v2 = tuple(v1), tuple(v2)
        taken = set(v1) | set(v2)
        return cls(v1, v2, tuple(v for v in range(n) if v not in taken))

    @property
    def m(self) -> int:
        return len(self.v1)

    def order(self) -> list[int]:
        return list(self.v1) + list(self.v2) + list(self.rest)

    def swapped(self) -> "GGMPartition":
        return GGMPartition(self.v2, self.v1, self.rest, self.ell)

    def canonical(self) -> "GGMPartition":
        """Orient so that V_1 holds the smallest vertex of V_1 | V_2."""
        return self if self.v1[0] < self.v2[0] else self.swapped()

    def to_dict(self) -> dict:
        return {"V1": list(self.v1), "V2": list(self.v2), "rest": list(self.rest), "ell": self.ell}


def check_ggm_partition(p: GGMPartition, n: int) -> None:
    if len(p.v1) != len(p.v2):
        raise SizeMismatch(f"|V_1| = {len(p.v1)} but |V_2| = {len(p.v2)}")
    if not p.v1:
        raise SizeMismatch("V_1 and V_2 must be nonempty")
    seen = list(p.v1) + list(p.v2) + list(p.rest)
    bad = [v for v in seen if not 0 <= v < n]
    if bad:
        raise NotAPartition(f"vertices {bad} are outside 0..{n - 1}")
    if len(set(seen)) != len(seen):
        dup = sorted({v for v in seen if seen.count(v) > 1})
        raise NotAPartition(f"vertices {dup} appear in more than one part")
    if len(seen) != n:
        raise NotAPartition(f"vertices {sorted(set(range(n)) - set(seen))} are not covered")


def classify_rest_vertex(c1, c2) -> GGMVertexCase | None:
    """Case of a rest vertex from its edge signs towards V_1 (``c1``) and V_2 (``c2``)."""
    m = len(c1)
    p1, q1 = sum(1 for x in c1 if x > 0), sum(1 for x in c1 if x < 0)
    p2, q2 = sum(1 for x in c2 if x > 0), sum(1 for x in c2 if x < 0)
    matches = []
    if p1 == m and q1 == p2 == q2 == 0:
        matches.append(GGMVertexCase.FULL_POS_1)
    if p2 == m and q2 == p1 == q1 == 0:
        matches.append(GGMVertexCase.FULL_POS_2)
    if q1 == m and p1 == p2 == q2 == 0:
        matches.append(GGMVertexCase.FULL_NEG_1)
    if q2 == m and p2 == p1 == q1 == 0:
        matches.append(GGMVertexCase.FULL_NEG_2)
    if p1 - q1 == p2 - q2:
        matches.append(GGMVertexCase.EQUAL)
    if p1 == m and q2 == m:
        matches.append(GGMVertexCase.FULL_MIXED_12)
    if q1 == m and p2 == m:
        matches.append(GGMVertexCase.FULL_MIXED_21)
    if len(matches) > 1:
        raise AssertionError(f"ambiguous rest-vertex pattern: {matches}")
    return matches[0] if matches else None


def rest_column_image(c1, c2, case: GGMVertexCase) -> tuple[list[int], list[int]]:
    """New edge signs towards (V_1, V_2) after switching."""
    c1, c2 = list(c1), list(c2)
    if case in (GGMVertexCase.FULL_POS_1, GGMVertexCase.FULL_NEG_1,
                GGMVertexCase.FULL_POS_2, GGMVertexCase.FULL_NEG_2):
        return c2, c1
    if case in (GGMVertexCase.FULL_MIXED_12, GGMVertexCase.FULL_MIXED_21):
        return [-x for x in c1], [-x for x in c2]
    return c1, c2


@dataclass
class GGMReport:
    admissible: bool
    partition: GGMPartition
    ell: int | None = None
    cases: dict[int, GGMVertexCase] = field(default_factory=dict)
    violation: str | None = None
    offenders: tuple[int, ...] = ()

    def is_trivial(self) -> bool:
        return all(c is GGMVertexCase.EQUAL for c in self.cases.values())

    def to_dict(self) -> dict:
        return {
            "admissible": self.admissible,
            "partition": self.partition.to_dict(),
            "ell": self.ell,
            "cases": [{"vertex": v, "case": c.value} for v, c in sorted(self.cases.items())],
            "violation": self.violation,
            "offenders": list(self.offenders),
        }


def validate_ggm(g: SignedGraph, p: GGMPartition) -> GGMReport:
    check_ggm_partition(p, g.n)
    a = adjacency_matrix(g)
    v1, v2 = list(p.v1), list(p.v2)
    to1 = a[:, v1].sum(axis=1)
    to2 = a[:, v2].sum(axis=1)
    diffs = [(v, int(to1[v] - to2[v])) for v in v1] + [(u, int(to2[u] - to1[u])) for u in v2]
    ell = diffs[0][1]
    report = GGMReport(True, replace(p, ell=ell), ell)
    for v, value in diffs:
        if value != ell:
            report.admissible = False
            report.ell = None
            report.partition = replace(p, ell=None)
            report.offenders = (diffs[0][0], v)
            report.violation = (
                f"vertex {v} has side difference {value} but vertex {diffs[0][0]} has {ell}"
            )
            return report
    for v in p.rest:
        case = classify_rest_vertex(a[v, v1].tolist(), a[v, v2].tolist())
        if case is None:
            report.admissible = False
            report.offenders = (v,)
            report.violation = (
                f"rest vertex {v} has net-degrees {int(to1[v])} and {int(to2[v])} towards "
                f"V_1 and V_2 and matches no switchable pattern"
            )
            report.cases = {}
            return report
        report.cases[v] = case
    return report


def ggm_switch(g: SignedGraph, p: GGMPartition, report: GGMReport | None = None) -> SignedGraph:
    if report is None:
        report = validate_ggm(g, p)
    if not report.admissible:
        raise NotAdmissible(report.violation, report)
    signs = {(u, v): s for u, v, s in g.edges}
    for v, case in report.cases.items():
        c1 = [g.sign(v, w) for w in p.v1]
        c2 = [g.sign(v, w) for w in p.v2]
        n1, n2 = rest_column_image(c1, c2, case)
        for w, s in zip(p.v1 + p.v2, n1 + n2):
            key = (min(v, w), max(v, w))
            if s:
                signs[key] = s
            else:
                signs.pop(key, None)
    return build_graph(g.n, [(u, v, s) for (u, v), s in signs.items()])


def build_u(m: int) -> np.ndarray:
    if m < 1:
        raise ValueError("m must be positive")
    j = exact.ones(m)
    block = np.block([[-j, j], [j, -j]])
    return exact.identity(2 * m) + block * Fraction(1, m)


def difference_sums(g: SignedGraph, p: GGMPartition) -> tuple[list[int], list[int]]:
    """Row sums of ``A_1 - B`` and column-wise sums of ``A_2 - B^T``.

    With ``M = [[A_1, B], [B^T, A_2]]`` on ``V_1 | V_2``: entry ``i`` of the
    first list is ``sum_j (A_1)_ij - B_ij`` and entry ``i'`` of the second is
    ``sum_j (A_2)_i'j - B_ji'``.  Admissibility makes every entry equal ell.
    """
    a = adjacency_matrix(g)
    a1 = a[np.ix_(p.v1, p.v1)]
    a2 = a[np.ix_(p.v2, p.v2)]
    b = a[np.ix_(p.v1, p.v2)]
    return (a1 - b).sum(axis=1).tolist(), (a2 - b.T).sum(axis=1).tolist()


def n_blocks(g: SignedGraph, p: GGMPartition) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Blocks ``N_11, N_12, N_22`` of ``U M U - M`` in exact rationals."""
    a = adjacency_matrix(g)
    idx = list(p.v1) + list(p.v2)
    m_blk = exact.rational(a[np.ix_(idx, idx)])
    u = build_u(p.m)
    n = u.dot(m_blk).dot(u) - m_blk
    k = p.m
    return n[:k, :k], n[:k, k:], n[k:, k:]


def verify_conjugation_ggm(g: SignedGraph, p: GGMPartition) -> bool:
    """Exact check that ``diag(U_2m, I_d)`` conjugates A onto the switched graph.

    Also requires the ``V_1 | V_2`` block to be fixed, i.e. all three N
    blocks vanish.
    """
    report = validate_ggm(g, p)
    switched = ggm_switch(g, p, report)
    q = exact.block_diag(build_u(p.m), exact.identity(len(p.rest)))
    order = p.order()
    a = exact.rational(exact.reorder(adjacency_matrix(g), order))
    conj = q.dot(a).dot(q)
    if not exact.equal(conj, exact.reorder(adjacency_matrix(switched), order)):
        return False
    return all(not np.any(blk != 0) for blk in n_blocks(g, p))
