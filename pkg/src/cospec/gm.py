"""Signed Godsil-McKay switching.

A partition ``{C_1, ..., C_t, D}`` of the vertex set is admissible when

* every vertex of ``C_i`` has the same net-degree into ``C_j``, for all
  ``i, j`` (including ``i == j``), and
* every ``v`` in ``D`` meets each ``C_i`` in one of five patterns: net-degree
  zero, positive to exactly half of ``C_i``, negative to exactly half,
  positive to all, negative to all.

The switched graph negates the edges of each net-zero pattern and moves the
half patterns onto the complementary half.  It equals ``Q A Q`` with
``Q = diag(Q_{n_1}, ..., Q_{n_t}, I_d)`` and ``Q_m = (2/m) J_m - I_m``, so it
is cospectral with the input.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import exact
from .core import SignedGraph, adjacency_matrix, build_graph
from .errors import (
    ColumnCaseViolation,
    NotAdmissible,
    NotAPartition,
    Overlap,
    ParseError,
    RowSumNotConstant,
    ShapeMismatch,
)

__all__ = [
    "GMPartition",
    "GMColumnCase",
    "GMReport",
    "classify_column",
    "column_image",
    "validate_gm",
    "gm_switch",
    "q_matrix",
    "build_q",
    "verify_conjugation_gm",
    "block_switch_matrix",
    "is_equitable",
    "parse_gm_partition",
    "format_gm_partition",
]


class GMColumnCase(enum.Enum):
    NET_ZERO = "NetZero"
    HALF_POSITIVE = "HalfPositive"
    HALF_NEGATIVE = "HalfNegative"
    ALL_POSITIVE = "AllPositive"
    ALL_NEGATIVE = "AllNegative"


@dataclass(frozen=True)
class GMPartition:
    """Parts ``C_1..C_t`` (``parts``) and the remainder ``d``; vertices sorted."""

    parts: tuple[tuple[int, ...], ...]
    d: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(tuple(sorted(int(v) for v in p)) for p in self.parts))
        object.__setattr__(self, "d", tuple(sorted(int(v) for v in self.d)))

    @classmethod
    def from_one_indexed(cls, parts, d=()):
        return cls(tuple(tuple(v - 1 for v in p) for p in parts), tuple(v - 1 for v in d))

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def order(self) -> list[int]:
        """Vertex order C_1, ..., C_t, D used for the block form."""
        return [v for p in self.parts for v in p] + list(self.d)

    def canonical(self) -> "GMPartition":
        return GMPartition(tuple(sorted(self.parts)), self.d)

    def to_dict(self) -> dict:
        return {"C": [list(p) for p in self.parts], "D": list(self.d)}


def check_gm_partition(pi: GMPartition, n: int) -> None:
    if pi.t < 1:
        raise NotAPartition("need at least one C part")
    if any(len(p) == 0 for p in pi.parts):
        raise NotAPartition("C parts must be nonempty")
    seen = [v for p in pi.parts for v in p] + list(pi.d)
    bad = [v for v in seen if not 0 <= v < n]
    if bad:
        raise NotAPartition(f"vertices {bad} are outside 0..{n - 1}")
    if len(set(seen)) != len(seen):
        dup = sorted({v for v in seen if seen.count(v) > 1})
        raise NotAPartition(f"vertices {dup} appear in more than one part")
    if len(seen) != n:
        missing = sorted(set(range(n)) - set(seen))
        raise NotAPartition(f"vertices {missing} are not covered")


def classify_column(x: Sequence[int]) -> GMColumnCase | None:
    """Which of the five switchable patterns a (-1, 0, 1) vector has, if any."""
    m = len(x)
    plus = sum(1 for e in x if e == 1)
    minus = sum(1 for e in x if e == -1)
    if plus == minus:
        return GMColumnCase.NET_ZERO
    if m and plus == m:
        return GMColumnCase.ALL_POSITIVE
    if m and minus == m:
        return GMColumnCase.ALL_NEGATIVE
    if m % 2 == 0 and minus == 0 and 2 * plus == m:
        return GMColumnCase.HALF_POSITIVE
    if m % 2 == 0 and plus == 0 and 2 * minus == m:
        return GMColumnCase.HALF_NEGATIVE
    return None


def column_image(x: Sequence[int], case: GMColumnCase) -> list[int]:
    """The column that replaces ``x`` after switching."""
    if case is GMColumnCase.NET_ZERO:
        return [-e for e in x]
    if case is GMColumnCase.HALF_POSITIVE:
        return [1 - e for e in x]
    if case is GMColumnCase.HALF_NEGATIVE:
        return [-1 - e for e in x]
    return list(x)


@dataclass
class GMReport:
    """Admissibility diagnostics for a GM partition.

    ``net_degrees[i][j]`` is the common net-degree of ``C_i`` vertices into
    ``C_j`` (``None`` where it is not constant).  ``cases`` maps
    ``(v, i)`` for ``v`` in D to its column pattern.
    """

    admissible: bool
    partition: GMPartition
    net_degrees: list[list[int | None]] = field(default_factory=list)
    cases: dict[tuple[int, int], GMColumnCase] = field(default_factory=dict)
    violation: str | None = None
    offenders: tuple[int, ...] = ()

    def is_trivial(self, g: SignedGraph) -> bool:
        """True when switching would leave ``g`` unchanged."""
        for (v, i), case in self.cases.items():
            if case in (GMColumnCase.HALF_POSITIVE, GMColumnCase.HALF_NEGATIVE):
                return False
            if case is GMColumnCase.NET_ZERO and any(g.sign(v, w) for w in self.partition.parts[i]):
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "admissible": self.admissible,
            "partition": self.partition.to_dict(),
            "net_degrees": self.net_degrees,
            "cases": [
                {"vertex": v, "part": i, "case": c.value} for (v, i), c in sorted(self.cases.items())
            ],
            "violation": self.violation,
            "offenders": list(self.offenders),
        }


def validate_gm(g: SignedGraph, pi: GMPartition) -> GMReport:
    check_gm_partition(pi, g.n)
    a = adjacency_matrix(g)
    t = pi.t
    report = GMReport(True, pi, [[None] * t for _ in range(t)])

    net = [a[:, list(p)].sum(axis=1) for p in pi.parts]
    for i, ci in enumerate(pi.parts):
        for j in range(t):
            values = net[j][list(ci)]
            if np.all(values == values[0]):
                report.net_degrees[i][j] = int(values[0])
            elif report.admissible:
                k = int(np.argmax(values != values[0]))
                report.admissible = False
                report.offenders = (ci[0], ci[k])
                report.violation = (
                    f"vertices {ci[0]} and {ci[k]} of C_{i + 1} have net-degrees "
                    f"{int(values[0])} and {int(values[k])} into C_{j + 1}"
                )
    if not report.admissible:
        return report

    for v in pi.d:
        for i, ci in enumerate(pi.parts):
            col = [int(x) for x in a[v, list(ci)]]
            case = classify_column(col)
            if case is None:
                report.admissible = False
                report.offenders = (v,)
                plus, minus = col.count(1), col.count(-1)
                hint = ""
                if len(ci) % 2 and (plus == 0 or minus == 0):
                    hint = f"; half patterns need an even part size, |C_{i + 1}| = {len(ci)}"
                report.violation = (
                    f"vertex {v} of D meets C_{i + 1} with {plus} positive and {minus} "
                    f"negative edges, matching none of the five switchable patterns{hint}"
                )
                report.cases = {}
                return report
            report.cases[(v, i)] = case
    return report


def gm_switch(g: SignedGraph, pi: GMPartition, report: GMReport | None = None) -> SignedGraph:
    """Apply the local switching; raises :class:`NotAdmissible` on a bad partition."""
    if report is None:
        report = validate_gm(g, pi)
    if not report.admissible:
        raise NotAdmissible(report.violation, report)
    signs = {(u, v): s for u, v, s in g.edges}
    for (v, i), case in report.cases.items():
        part = pi.parts[i]
        old = [g.sign(v, w) for w in part]
        new = column_image(old, case)
        for w, s in zip(part, new):
            key = (min(v, w), max(v, w))
            if s:
                signs[key] = s
            else:
                signs.pop(key, None)
    return build_graph(g.n, [(u, v, s) for (u, v), s in signs.items()])


def q_matrix(m: int) -> np.ndarray:
    """``(2/m) J_m - I_m`` with exact rational entries."""
    if m < 1:
        raise ValueError("block size must be positive")
    return exact.ones(m) * Fraction(2, m) - exact.identity(m)


def build_q(pi: GMPartition) -> np.ndarray:
    blocks = [q_matrix(k) for k in pi.sizes]
    if pi.d:
        blocks.append(exact.identity(len(pi.d)))
    return exact.block_diag(*blocks)


def verify_conjugation_gm(g: SignedGraph, pi: GMPartition) -> bool:
    """Check ``Q A Q`` against the combinatorially switched graph, exactly.

    Both adjacency matrices are taken in the block order C_1..C_t, D.
    """
    report = validate_gm(g, pi)
    switched = gm_switch(g, pi, report)
    order = pi.order()
    q = build_q(pi)
    a = exact.rational(exact.reorder(adjacency_matrix(g), order))
    conj = q.dot(a).dot(q)
    return exact.equal(conj, exact.reorder(adjacency_matrix(switched), order))


def block_switch_matrix(b, n_mat, c_mat) -> tuple[np.ndarray, np.ndarray]:
    """Build ``M = [[B, N], [N^T, C]]`` and its cospectral partner ``M~``.

    Each column of ``N`` must follow one of the five patterns accepted by
    :func:`classify_column`; ``M~`` replaces it by :func:`column_image`.
    ``B`` must have constant row sums.
    """
    b = np.asarray(b, dtype=np.int64)
    n_mat = np.asarray(n_mat, dtype=np.int64)
    c_mat = np.asarray(c_mat, dtype=np.int64)
    if n_mat.ndim == 1:
        n_mat = n_mat.reshape(-1, 1)
    nb, nc = n_mat.shape
    if b.shape != (nb, nb) or c_mat.shape != (nc, nc):
        raise ShapeMismatch(f"block shapes {b.shape}, {n_mat.shape}, {c_mat.shape} do not fit")
    if nb and len(set(b.sum(axis=1).tolist())) > 1:
        raise RowSumNotConstant(f"row sums of B are {b.sum(axis=1).tolist()}")
    if not np.all(np.isin(n_mat, (-1, 0, 1))):
        raise ColumnCaseViolation("N must have entries in {-1, 0, 1}")
    n_new = n_mat.copy()
    for j in range(nc):
        col = n_mat[:, j].tolist()
        case = classify_column(col)
        if case is None:
            raise ColumnCaseViolation(f"column {j} = {col} matches none of the five patterns")
        n_new[:, j] = column_image(col, case)
    m = np.block([[b, n_mat], [n_mat.T, c_mat]])
    m_new = np.block([[b, n_new], [n_new.T, c_mat]])
    return m, m_new


def is_equitable(g: SignedGraph, parts: Sequence[Iterable[int]]) -> bool:
    """Net-degree equitability of ``parts`` in the subgraph they induce."""
    parts = [sorted(set(p)) for p in parts]
    flat = [v for p in parts for v in p]
    if len(set(flat)) != len(flat):
        raise Overlap("parts must be disjoint")
    a = adjacency_matrix(g)
    for ci in parts:
        for cj in parts:
            values = a[np.ix_(ci, cj)].sum(axis=1)
            if len(values) and np.any(values != values[0]):
                return False
    return True


_BLOCK = re.compile(r"^([CD]):(\d+(?:,\d+)*)?$")


def parse_gm_partition(text: str, n: int | None = None) -> GMPartition:
    """Parse ``"C:0,1,2 C:3,4,5,6 D:7"``.

    When ``n`` is given and no D block is present, D collects the vertices
    left uncovered by the C blocks.
    """
    parts, d, seen_d = [], [], False
    for block in text.split():
        match = _BLOCK.match(block)
        if not match:
            raise ParseError(f"bad partition block {block!r}; expected C:1,2,... or D:1,2,...")
        kind, body = match.groups()
        verts = [int(x) for x in body.split(",")] if body else []
        if kind == "D":
            if seen_d:
                raise ParseError("at most one D block is allowed")
            seen_d = True
            d = verts
        else:
            parts.append(verts)
    if not parts:
        raise ParseError("partition needs at least one C block")
    if n is not None and not seen_d:
        covered = {v for p in parts for v in p}
        d = [v for v in range(n) if v not in covered]
    return GMPartition(tuple(tuple(p) for p in parts), tuple(d))


def format_gm_partition(pi: GMPartition) -> str:
    blocks = ["C:" + ",".join(map(str, p)) for p in pi.parts]
    if pi.d:
        blocks.append("D:" + ",".join(map(str, pi.d)))
    return " ".join(blocks)
