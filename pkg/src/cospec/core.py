"""Signed graphs, vertex-set switching, net-degrees and balance.

Vertices are the integers ``0..n-1``.  A :class:`SignedGraph` is immutable;
every operation here returns a new graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateEdge, NonSquare, NonSymmetric, SelfLoop, VertexOutOfRange

__all__ = [
    "SignedGraph",
    "DegreeProfile",
    "BalanceResult",
    "build_graph",
    "from_adjacency",
    "adjacency_matrix",
    "switching_matrix",
    "switch",
    "part_degree_profile",
    "is_balanced",
    "underlying_graph",
    "relabel",
]


def _check_vertex(v, n):
    if not (isinstance(v, (int, np.integer)) and 0 <= v < n):
        raise VertexOutOfRange(f"vertex {v!r} not in 0..{n - 1}")
    return int(v)


def _sign_value(s):
    if s in (1, "+", "+1"):
        return 1
    if s in (-1, "-", "-1"):
        return -1
    raise ValueError(f"edge sign must be +1 or -1, got {s!r}")


@dataclass(frozen=True)
class SignedGraph:
    """A simple graph whose edges carry a sign in {+1, -1}.

    ``edges`` is the canonical representation: a sorted tuple of
    ``(u, v, sign)`` with ``u < v``.  Build instances with :func:`build_graph`.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]
    _signs: dict = field(default=None, compare=False, repr=False, hash=False)
    _adj: tuple = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        signs = {}
        adj = [{} for _ in range(self.n)]
        for u, v, s in self.edges:
            signs[(u, v)] = signs[(v, u)] = s
            adj[u][v] = adj[v][u] = s
        object.__setattr__(self, "_signs", signs)
        object.__setattr__(self, "_adj", tuple(adj))

    def sign(self, u: int, v: int) -> int:
        """Sign of the edge uv, or 0 when u and v are not adjacent."""
        return self._signs.get((u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._signs

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> dict[int, int]:
        """Map each neighbour of ``v`` to the sign of the joining edge."""
        return dict(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _s in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_all_positive(self) -> bool:
        return all(s == 1 for _u, _v, s in self.edges)

    def __repr__(self):
        return f"SignedGraph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class DegreeProfile:
    d_plus: int
    d_minus: int

    @property
    def d_net(self) -> int:
        return self.d_plus - self.d_minus


@dataclass(frozen=True)
class BalanceResult:
    """Outcome of :func:`is_balanced`.

    When balanced, ``switching_set`` makes every edge positive.  Otherwise
    ``negative_cycle`` lists the vertices of a cycle whose sign is -1.
    """

    balanced: bool
    switching_set: frozenset | None = None
    negative_cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.balanced


def build_graph(n: int, signed_edges: Iterable[Sequence]) -> SignedGraph:
    """Build a signed graph on ``n`` vertices from ``(u, v, sign)`` triples."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    seen = {}
    for item in signed_edges:
        u, v, s = item
        u = _check_vertex(u, n)
        v = _check_vertex(v, n)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice")
        seen[key] = _sign_value(s)
    edges = tuple(sorted((u, v, s) for (u, v), s in seen.items()))
    return SignedGraph(n, edges)


def from_adjacency(matrix) -> SignedGraph:
    """Inverse of :func:`adjacency_matrix` for symmetric (0, +1, -1) matrices."""
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquare(f"adjacency matrix must be square, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise NonSymmetric("adjacency matrix must be symmetric")
    n = a.shape[0]
    if np.any(np.diag(a) != 0):
        raise SelfLoop("adjacency matrix has a nonzero diagonal entry")
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if a[u, v] != 0:
                edges.append((u, v, int(a[u, v])))
    return build_graph(n, edges)


def adjacency_matrix(g: SignedGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.edges:
        a[u, v] = a[v, u] = s
    return a


def switching_matrix(n: int, u_set: Iterable[int]) -> np.ndarray:
    """Diagonal signature matrix with +1 on ``u_set`` and -1 elsewhere."""
    s = -np.ones(n, dtype=np.int64)
    for v in u_set:
        s[_check_vertex(v, n)] = 1
    return np.diag(s)


def switch(g: SignedGraph, u_set: Iterable[int]) -> SignedGraph:
    """Negate the sign of every edge in the cut between ``u_set`` and its complement."""
    u = {_check_vertex(v, g.n) for v in u_set}
    edges = tuple((a, b, -s if ((a in u) != (b in u)) else s) for a, b, s in g.edges)
    return SignedGraph(g.n, edges)


def part_degree_profile(g: SignedGraph, v: int, part: Iterable[int]) -> DegreeProfile:
    """Count positive and negative edges from ``v`` into ``part``."""
    v = _check_vertex(v, g.n)
    plus = minus = 0
    for w in part:
        s = g.sign(v, _check_vertex(w, g.n))
        if s > 0:
            plus += 1
        elif s < 0:
            minus += 1
    return DegreeProfile(plus, minus)


def is_balanced(g: SignedGraph) -> BalanceResult:
    """Decide balance by propagating vertex labels along a BFS spanning forest.

    Each component root gets label +1 and a tree edge uv forces
    ``label[v] = sign(uv) * label[u]``.  The graph is balanced iff every
    non-tree edge agrees with the labels; a disagreeing edge together with
    the two tree paths to their common ancestor is a negative cycle.
    """
    adj = [sorted(g._adj[v]) for v in range(g.n)]
    label = [0] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    comps = []
    for root in range(g.n):
        if label[root]:
            continue
        label[root] = 1
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not label[w]:
                    label[w] = g.sign(u, w) * label[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)

    for u, v, s in g.edges:
        if s * label[u] * label[v] < 0:
            return BalanceResult(False, None, _tree_cycle(u, v, parent, depth))

    u_set = set()
    for comp in comps:
        neg = [v for v in comp if label[v] < 0]
        pos = [v for v in comp if label[v] > 0]
        # either side works; keep the smaller, ties go to the side holding the root
        u_set.update(neg if len(neg) < len(pos) else pos)
    return BalanceResult(True, frozenset(u_set), None)


def _tree_cycle(u, v, parent, depth):
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def underlying_graph(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, tuple((u, v, 1) for u, v, _s in g.edges))


def relabel(g: SignedGraph, perm: Sequence[int]) -> SignedGraph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return build_graph(g.n, [(perm[u], perm[v], s) for u, v, s in g.edges])
