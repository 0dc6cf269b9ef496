"""Finding admissible partitions, and generating random admissible instances.

The finders backtrack over vertex-to-part assignments in vertex order.
After each assignment two sound prunes run:

* net-degree spread: two vertices that must end with equal net-degree into
  some part cannot differ by more than the number of their still-unassigned
  neighbours allows;
* pattern reachability: each outside vertex must still be able to reach one
  of its switchable patterns given the unassigned vertices.

The generators build instances from the admissibility conditions outward,
so every instance they return is admissible by construction.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import SignedGraph, adjacency_matrix, build_graph
from .errors import BudgetExceeded, InfeasibleParameters, TooLarge
from .ggm import GGMPartition, validate_ggm
from .gm import GMColumnCase, GMPartition, validate_gm

__all__ = [
    "SearchLimits",
    "find_gm_partitions",
    "find_ggm_partitions",
    "generate_gm_instance",
    "generate_ggm_instance",
]


@dataclass(frozen=True)
class SearchLimits:
    t_max: int = 3
    n_max: int = 16
    time_budget: float = 30.0
    candidate_cap: int = 100_000

    def __post_init__(self):
        for name in ("t_max", "n_max", "time_budget", "candidate_cap"):
            if not getattr(self, name) > 0:
                raise ValueError(f"SearchLimits.{name} must be positive")


class _Clock:
    def __init__(self, limits: SearchLimits, found: list):
        self.deadline = time.monotonic() + limits.time_budget
        self.cap = limits.candidate_cap
        self.found = found
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.ticks & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted", self.found)

    def add(self, item):
        self.found.append(item)
        if len(self.found) >= self.cap:
            raise BudgetExceeded("candidate cap reached", self.found)


def _future_counts(a, n):
    """fpos[k][v], fneg[k][v]: neighbours of v among vertices k+1..n-1."""
    fpos = [[0] * n for _ in range(n)]
    fneg = [[0] * n for _ in range(n)]
    for k in range(n - 2, -1, -1):
        x = k + 1
        for v in range(n):
            fpos[k][v] = fpos[k + 1][v] + (a[v][x] > 0)
            fneg[k][v] = fneg[k + 1][v] + (a[v][x] < 0)
    return fpos, fneg


def _spread_ok(values, bounds):
    if len(values) < 2:
        return True
    return max(d - b for d, b in zip(values, bounds)) <= min(d + b for d, b in zip(values, bounds))


def _gm_d_feasible(p, q, size, fp, fn, fz):
    """Can a D vertex with p/q positive/negative edges into a part of ``size``
    still end in a switchable pattern once some of its fp/fn/fz future
    positive/negative/non-neighbours join that part?"""
    if -fn <= q - p <= fp:
        return True
    if q == 0 and p == size:
        return True
    if p == 0 and q == size:
        return True
    # half positive: final 2(p + a) = size + a + c  =>  a = size - 2p + c
    if q == 0 and max(size - 2 * p, 0) <= min(size - 2 * p + fz, fp):
        return True
    if p == 0 and max(size - 2 * q, 0) <= min(size - 2 * q + fz, fn):
        return True
    return False


def find_gm_partitions(
    g: SignedGraph, limits: SearchLimits | None = None, *, nontrivial: bool = True
) -> list[GMPartition]:
    """All admissible GM partitions with at most ``limits.t_max`` C parts.

    C parts are numbered by their smallest vertex, which removes the
    reorderings of the same partition.  Raises :class:`BudgetExceeded`
    carrying the partial list when the time budget or candidate cap runs out.
    """
    limits = limits or SearchLimits()
    n = g.n
    if n > limits.n_max:
        raise TooLarge(f"graph has {n} vertices, search limit is {limits.n_max}")
    a = adjacency_matrix(g).tolist()
    fpos, fneg = _future_counts(a, n)
    found: list[GMPartition] = []
    clock = _Clock(limits, found)

    parts: list[list[int]] = []
    dset: list[int] = []
    # plus[v][j] / minus[v][j]: positive / negative edges from v into part j so far
    plus = [[0] * limits.t_max for _ in range(n)]
    minus = [[0] * limits.t_max for _ in range(n)]

    def consistent(k):
        left = n - 1 - k
        fut = [fpos[k][v] + fneg[k][v] for v in range(n)] if left else [0] * n
        for ci in parts:
            bounds = [fut[v] for v in ci]
            for j in range(len(parts)):
                if not _spread_ok([plus[v][j] - minus[v][j] for v in ci], bounds):
                    return False
        for v in dset:
            fp, fn = (fpos[k][v], fneg[k][v]) if left else (0, 0)
            fz = left - fp - fn
            for j, cj in enumerate(parts):
                if not _gm_d_feasible(plus[v][j], minus[v][j], len(cj), fp, fn, fz):
                    return False
        return True

    def place(k, j, sign):
        for v in range(n):
            s = a[v][k]
            if s > 0:
                plus[v][j] += sign
            elif s < 0:
                minus[v][j] += sign

    def leaf():
        if not dset and nontrivial:
            return
        pi = GMPartition(tuple(tuple(p) for p in parts), tuple(dset))
        report = validate_gm(g, pi)
        if report.admissible and not (nontrivial and report.is_trivial(g)):
            clock.add(pi)

    def rec(k):
        clock.tick()
        if k == n:
            if parts:
                leaf()
            return
        dset.append(k)
        if consistent(k):
            rec(k + 1)
        dset.pop()
        for j in range(len(parts)):
            parts[j].append(k)
            place(k, j, 1)
            if consistent(k):
                rec(k + 1)
            place(k, j, -1)
            parts[j].pop()
        if len(parts) < limits.t_max:
            j = len(parts)
            parts.append([k])
            place(k, j, 1)
            if consistent(k):
                rec(k + 1)
            place(k, j, -1)
            parts.pop()

    rec(0)
    return sorted(found, key=lambda p: (p.parts, p.d))


def find_ggm_partitions(
    g: SignedGraph,
    limits: SearchLimits | None = None,
    *,
    sizes: Iterable[int] | None = None,
    nontrivial: bool = True,
) -> list[GGMPartition]:
    """All admissible generalized GM partitions, one orientation each.

    ``sizes`` restricts the side size m (default: every m from 1 to n // 2).
    Results are oriented so V_1 holds the smallest vertex of V_1 | V_2 and
    ordered by (m, V_1, V_2).
    """
    limits = limits or SearchLimits()
    n = g.n
    if n > limits.n_max:
        raise TooLarge(f"graph has {n} vertices, search limit is {limits.n_max}")
    a = adjacency_matrix(g).tolist()
    fpos, fneg = _future_counts(a, n)
    found: list[GGMPartition] = []
    clock = _Clock(limits, found)
    ms = sorted(set(sizes)) if sizes is not None else list(range(1, n // 2 + 1))

    for m in ms:
        if m < 1 or 2 * m > n:
            continue
        sides: list[list[int]] = [[], []]
        rest: list[int] = []
        # cnt[v] = [plus to V_1, minus to V_1, plus to V_2, minus to V_2]
        cnt = [[0, 0, 0, 0] for _ in range(n)]

        def place(k, side, sign):
            off = 2 * side
            for v in range(n):
                s = a[v][k]
                if s > 0:
                    cnt[v][off] += sign
                elif s < 0:
                    cnt[v][off + 1] += sign

        def consistent(k):
            left = n - 1 - k
            r1, r2 = m - len(sides[0]), m - len(sides[1])
            if r1 + r2 > left:
                return False
            slots = r1 + r2
            vals, bounds = [], []
            for side, members in enumerate(sides):
                for v in members:
                    p1, q1, p2, q2 = cnt[v]
                    diff = (p1 - q1) - (p2 - q2)
                    vals.append(diff if side == 0 else -diff)
                    fut = fpos[k][v] + fneg[k][v] if left else 0
                    bounds.append(min(fut, slots))
            if not _spread_ok(vals, bounds):
                return False
            n1, n2 = len(sides[0]), len(sides[1])
            for v in rest:
                fp, fn = (fpos[k][v], fneg[k][v]) if left else (0, 0)
                fz = left - fp - fn
                if not _ggm_rest_feasible(cnt[v], n1, n2, r1, r2, fp, fn, fz):
                    return False
            return True

        def rec(k):
            clock.tick()
            if k == n:
                p = GGMPartition(tuple(sides[0]), tuple(sides[1]), tuple(rest))
                report = validate_ggm(g, p)
                if report.admissible and not (nontrivial and report.is_trivial()):
                    clock.add(report.partition)
                return
            rest.append(k)
            if consistent(k):
                rec(k + 1)
            rest.pop()
            for side in (0, 1):
                if len(sides[side]) == m:
                    continue
                if side == 1 and not sides[0]:
                    continue  # V_1 takes the first vertex of V_1 | V_2
                sides[side].append(k)
                place(k, side, 1)
                if consistent(k):
                    rec(k + 1)
                place(k, side, -1)
                sides[side].pop()

        rec(0)
    return sorted(found, key=lambda p: (p.m, p.v1, p.v2))


def _ggm_rest_feasible(c, n1, n2, r1, r2, fp, fn, fz):
    p1, q1, p2, q2 = c
    # full to one side with a single sign, silent on the other
    if q1 == 0 and p2 == 0 and q2 == 0 and p1 == n1 and fp >= r1 and fz >= r2:
        return True
    if q2 == 0 and p1 == 0 and q1 == 0 and p2 == n2 and fp >= r2 and fz >= r1:
        return True
    if p1 == 0 and p2 == 0 and q2 == 0 and q1 == n1 and fn >= r1 and fz >= r2:
        return True
    if p2 == 0 and p1 == 0 and q1 == 0 and q2 == n2 and fn >= r2 and fz >= r1:
        return True
    # opposite full signs on the two sides
    if p1 == n1 and q2 == n2 and fp >= r1 and fn >= r2:
        return True
    if q1 == n1 and p2 == n2 and fn >= r1 and fp >= r2:
        return True
    delta = (p1 - q1) - (p2 - q2)
    return abs(delta) <= min(fp + fn, r1 + r2)


# ---------------------------------------------------------------- generators


def _check_unit(name, x):
    if not 0.0 <= x <= 1.0:
        raise InfeasibleParameters(f"{name} must lie in [0, 1], got {x}")


def _entry(rng, density, sign_bias):
    if rng.random() >= density:
        return 0
    return 1 if rng.random() < sign_bias else -1


def _symmetric_circulant(rng, k, density, sign_bias):
    """Symmetric zero-diagonal k x k (-1, 0, 1) matrix with constant row sums."""
    w = [0] * k
    for d in range(1, k // 2 + 1):
        w[d] = w[k - d] = _entry(rng, density, sign_bias)
    mat = [[w[(y - x) % k] for y in range(k)] for x in range(k)]
    perm = list(range(k))
    rng.shuffle(perm)
    return [[mat[perm[x]][perm[y]] for y in range(k)] for x in range(k)]


def _biregular_block(rng, rows, cols, density, sign_bias):
    """rows x cols (-1, 0, 1) matrix with constant row sums and constant column sums."""
    g = math.gcd(rows, cols)
    w = [_entry(rng, density, sign_bias) for _ in range(g)]
    mat = [[w[(x - y) % g] for y in range(cols)] for x in range(rows)]
    rp, cp = list(range(rows)), list(range(cols))
    rng.shuffle(rp)
    rng.shuffle(cp)
    return [[mat[rp[x]][cp[y]] for y in range(cols)] for x in range(rows)]


def _vector_with_sum(rng, k, target, density, sign_bias):
    """Random (-1, 0, 1) vector of length k with entry sum ``target``."""
    vec = [_entry(rng, density, sign_bias) for _ in range(k)]
    while sum(vec) != target:
        up = sum(vec) < target
        # move entries towards zero first so no new sign is introduced
        idx = [i for i, x in enumerate(vec) if (x < 0 if up else x > 0)]
        idx = idx or [i for i, x in enumerate(vec) if (x < 1 if up else x > -1)]
        i = rng.choice(idx)
        vec[i] += 1 if up else -1
    return vec


def _gm_column(rng, case, k, density, mixed=True):
    if case is GMColumnCase.ALL_POSITIVE:
        return [1] * k
    if case is GMColumnCase.ALL_NEGATIVE:
        return [-1] * k
    if case in (GMColumnCase.HALF_POSITIVE, GMColumnCase.HALF_NEGATIVE):
        s = 1 if case is GMColumnCase.HALF_POSITIVE else -1
        chosen = set(rng.sample(range(k), k // 2))
        return [s if i in chosen else 0 for i in range(k)]
    pairs = sum(rng.random() < density for _ in range(k // 2)) if mixed else 0
    spots = rng.sample(range(k), 2 * pairs)
    col = [0] * k
    for i in spots[:pairs]:
        col[i] = 1
    for i in spots[pairs:]:
        col[i] = -1
    return col


def _assemble(rng, n, entries, relabel=True):
    perm = list(range(n))
    if relabel:
        rng.shuffle(perm)
    edges = [(perm[u], perm[v], s) for (u, v), s in entries.items() if s]
    return build_graph(n, edges), perm


def generate_gm_instance(
    seed,
    n_parts: int | None = None,
    part_sizes: Sequence[int] | None = None,
    d_size: int = 2,
    edge_density: float = 0.5,
    sign_bias: float = 0.5,
    *,
    require_half: bool = False,
    relabel: bool = True,
) -> tuple[SignedGraph, GMPartition]:
    """Random signed graph together with an admissible GM partition.

    Diagonal blocks are permuted symmetric circulants, off-diagonal blocks
    permuted gcd-circulants (both have constant row and column sums), and
    each (D vertex, part) column is drawn from the five switchable patterns.
    ``require_half`` forces at least one half pattern and therefore needs an
    even part size.
    """
    rng = random.Random(seed)
    if part_sizes is None:
        count = n_parts if n_parts is not None else rng.randint(1, 3)
        part_sizes = [rng.randint(1, 4) for _ in range(count)]
    part_sizes = list(part_sizes)
    if n_parts is not None and n_parts != len(part_sizes):
        raise InfeasibleParameters(f"n_parts = {n_parts} but {len(part_sizes)} part sizes given")
    if not part_sizes or any(k < 1 for k in part_sizes):
        raise InfeasibleParameters("need at least one part, every part of size >= 1")
    if d_size < 0:
        raise InfeasibleParameters("d_size must be non-negative")
    _check_unit("edge_density", edge_density)
    _check_unit("sign_bias", sign_bias)
    even = [i for i, k in enumerate(part_sizes) if k % 2 == 0]
    if require_half:
        odd = [k for k in part_sizes if k % 2]
        if odd:
            raise InfeasibleParameters(f"half patterns need even part sizes, got {odd}")
        if d_size == 0:
            raise InfeasibleParameters("half patterns need at least one D vertex")

    offsets, at = [], 0
    for k in part_sizes:
        offsets.append(at)
        at += k
    n = at + d_size
    entries = {}

    def put(u, v, s):
        if s:
            entries[(min(u, v), max(u, v))] = s

    for i, ki in enumerate(part_sizes):
        blk = _symmetric_circulant(rng, ki, edge_density, sign_bias)
        for x in range(ki):
            for y in range(x + 1, ki):
                put(offsets[i] + x, offsets[i] + y, blk[x][y])
        for j in range(i + 1, len(part_sizes)):
            kj = part_sizes[j]
            blk = _biregular_block(rng, ki, kj, edge_density, sign_bias)
            for x in range(ki):
                for y in range(kj):
                    put(offsets[i] + x, offsets[j] + y, blk[x][y])

    d_vertices = list(range(at, n))
    forced = (rng.choice(d_vertices), rng.choice(even)) if require_half else None
    mixed = 0.0 < sign_bias < 1.0
    for v in d_vertices:
        for i, ki in enumerate(part_sizes):
            kinds = ["zero", "all"] + (["half"] if ki % 2 == 0 else [])
            kind = "half" if forced == (v, i) else rng.choice(kinds)
            positive = rng.random() < sign_bias
            case = {
                "zero": GMColumnCase.NET_ZERO,
                "all": GMColumnCase.ALL_POSITIVE if positive else GMColumnCase.ALL_NEGATIVE,
                "half": GMColumnCase.HALF_POSITIVE if positive else GMColumnCase.HALF_NEGATIVE,
            }[kind]
            col = _gm_column(rng, case, ki, edge_density, mixed)
            for x, s in enumerate(col):
                put(v, offsets[i] + x, s)
    for x, u in enumerate(d_vertices):
        for v in d_vertices[x + 1:]:
            put(u, v, _entry(rng, edge_density, sign_bias))

    g, perm = _assemble(rng, n, entries, relabel)
    parts = tuple(tuple(perm[offsets[i] + x] for x in range(k)) for i, k in enumerate(part_sizes))
    return g, GMPartition(parts, tuple(perm[v] for v in d_vertices))


def generate_ggm_instance(
    seed,
    m: int = 2,
    d_size: int = 2,
    edge_density: float = 0.5,
    sign_bias: float = 0.5,
    *,
    relabel: bool = True,
) -> tuple[SignedGraph, GGMPartition]:
    """Random signed graph with an admissible generalized GM partition.

    ``A_1`` and ``A_2`` are permuted symmetric circulants with one common row
    sum and ``B`` a permuted circulant, so ``A_1 - B`` and ``A_2 - B^T`` have
    the same constant row sums.  Rest vertices draw one of the seven
    patterns.
    """
    rng = random.Random(seed)
    if m < 1:
        raise InfeasibleParameters("m must be at least 1")
    if d_size < 0:
        raise InfeasibleParameters("d_size must be non-negative")
    _check_unit("edge_density", edge_density)
    _check_unit("sign_bias", sign_bias)

    a1 = _symmetric_circulant(rng, m, edge_density, sign_bias)
    target = sum(a1[0])
    for _ in range(50):
        a2 = _symmetric_circulant(rng, m, edge_density, sign_bias)
        if sum(a2[0]) == target:
            break
    else:
        perm = list(range(m))
        rng.shuffle(perm)
        a2 = [[a1[perm[x]][perm[y]] for y in range(m)] for x in range(m)]
    b = _biregular_block(rng, m, m, edge_density, sign_bias)

    n = 2 * m + d_size
    entries = {}

    def put(u, v, s):
        if s:
            entries[(min(u, v), max(u, v))] = s

    for x in range(m):
        for y in range(m):
            if x < y:
                put(x, y, a1[x][y])
                put(m + x, m + y, a2[x][y])
            put(x, m + y, b[x][y])

    rest = list(range(2 * m, n))
    mixed = 0.0 < sign_bias < 1.0
    for v in rest:
        kind = rng.choice(["full", "mixed", "equal"] if mixed else ["full", "equal"])
        if kind == "full":
            side = rng.randrange(2)
            sign = 1 if rng.random() < sign_bias else -1
            for x in range(m):
                put(v, side * m + x, sign)
        elif kind == "mixed":
            first = rng.choice((1, -1))
            for x in range(m):
                put(v, x, first)
                put(v, m + x, -first)
        else:
            c1 = [_entry(rng, edge_density, sign_bias) for _ in range(m)]
            c2 = _vector_with_sum(rng, m, sum(c1), edge_density, sign_bias)
            for x in range(m):
                put(v, x, c1[x])
                put(v, m + x, c2[x])
    for x, u in enumerate(rest):
        for v in rest[x + 1:]:
            put(u, v, _entry(rng, edge_density, sign_bias))

    g, perm = _assemble(rng, n, entries, relabel)
    p = GGMPartition(
        tuple(perm[x] for x in range(m)),
        tuple(perm[m + x] for x in range(m)),
        tuple(perm[v] for v in rest),
    )
    return g, validate_ggm(g, p).partition
