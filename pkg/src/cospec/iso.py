"""Switching isomorphism of small signed graphs by backtracking.

Vertices of the first graph are mapped in the order 0, 1, ... and images are
tried in increasing order, so the first complete mapping found is the
lexicographically least one.  Switching signs are solved on the fly: a
vertex with an already-mapped neighbour has its sign forced by that edge,
the least vertex of each component is fixed to +1, and any other vertex
without mapped neighbours branches on both signs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SignedGraph, relabel, switch, underlying_graph
from .errors import ShapeMismatch, TooLarge

__all__ = [
    "SwitchIsoCertificate",
    "are_switching_isomorphic",
    "verify_certificate",
    "underlying_isomorphic",
    "ISO_MAX_N",
]

ISO_MAX_N = 12


@dataclass(frozen=True)
class SwitchIsoCertificate:
    """``relabel(switch(a, u_set), perm) == b``."""

    perm: tuple[int, ...]
    u_set: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"perm": list(self.perm), "U": list(self.u_set)}


def _component_leaders(g: SignedGraph) -> list[bool]:
    leader = [False] * g.n
    comp = [-1] * g.n
    for root in range(g.n):
        if comp[root] >= 0:
            continue
        leader[root] = True
        comp[root] = root
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g._adj[u]:
                if comp[w] < 0:
                    comp[w] = root
                    stack.append(w)
    return leader


def _profile(g: SignedGraph, v: int):
    return (g.degree(v), tuple(sorted(g.degree(w) for w in g._adj[v])))


def _search(a: SignedGraph, b: SignedGraph, signed: bool) -> SwitchIsoCertificate | None:
    n = a.n
    if n > ISO_MAX_N:
        raise TooLarge(f"isomorphism search limited to n <= {ISO_MAX_N}, got n = {n}")
    if n != b.n or a.num_edges != b.num_edges:
        return None
    prof_a = [_profile(a, v) for v in range(n)]
    prof_b = [_profile(b, v) for v in range(n)]
    if sorted(prof_a) != sorted(prof_b):
        return None
    candidates = [[w for w in range(n) if prof_b[w] == prof_a[v]] for v in range(n)]
    leader = _component_leaders(a)
    perm = [-1] * n
    sgn = [0] * n
    used = [False] * n

    def rec(k):
        if k == n:
            return True
        for w in candidates[k]:
            if used[w]:
                continue
            forced = 0
            ok = True
            for u in range(k):
                sa = a.sign(u, k)
                sb = b.sign(perm[u], w)
                if (sa != 0) != (sb != 0):
                    ok = False
                    break
                if sa and signed:
                    need = sa * sb * sgn[u]
                    if forced and need != forced:
                        ok = False
                        break
                    forced = need
            if not ok:
                continue
            if not signed:
                choices = (1,)
            elif forced:
                choices = (forced,)
            elif leader[k]:
                choices = (1,)
            else:
                choices = (1, -1)
            perm[k] = w
            used[w] = True
            for s in choices:
                sgn[k] = s
                if rec(k + 1):
                    return True
            used[w] = False
            perm[k] = -1
        return False

    if not rec(0):
        return None
    u_set = tuple(v for v in range(n) if sgn[v] < 0) if signed else ()
    return SwitchIsoCertificate(tuple(perm), u_set)


def are_switching_isomorphic(a: SignedGraph, b: SignedGraph) -> SwitchIsoCertificate | None:
    """Certificate that ``a`` switches and relabels onto ``b``, or None."""
    return _search(a, b, signed=True)


def verify_certificate(a: SignedGraph, b: SignedGraph, cert: SwitchIsoCertificate) -> bool:
    if a.n != b.n or len(cert.perm) != a.n or any(not 0 <= v < a.n for v in cert.u_set):
        raise ShapeMismatch("certificate does not fit the two graphs")
    if sorted(cert.perm) != list(range(a.n)):
        return False
    return relabel(switch(a, cert.u_set), cert.perm) == b


def underlying_isomorphic(a: SignedGraph, b: SignedGraph) -> bool:
    return _search(underlying_graph(a), underlying_graph(b), signed=False) is not None
