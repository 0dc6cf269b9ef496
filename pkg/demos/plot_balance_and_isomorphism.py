"""
Balance, switching and switching isomorphism
============================================

Small signed graphs: detect balance, switch a vertex set, and recover the
switching from a relabelled copy.
"""

import random

from cospec import are_switching_isomorphic, build_graph, is_balanced, relabel, switch
from cospec.iso import verify_certificate

square = build_graph(4, [(0, 1, 1), (1, 2, -1), (2, 3, 1), (0, 3, -1)])
res = is_balanced(square)
print("4-cycle with two negative edges balanced:", res.balanced, " switch at", sorted(res.switching_set))
print("after switching all positive:", switch(square, res.switching_set).is_all_positive())

triangle = build_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)])
res = is_balanced(triangle)
print("triangle with one negative edge balanced:", res.balanced, " cycle", res.negative_cycle)

# hide a switching and a relabelling, then find them again
rng = random.Random(4)
edges = [(u, v, rng.choice((1, -1))) for u in range(7) for v in range(u + 1, 7) if rng.random() < 0.5]
a = build_graph(7, edges)
perm = list(range(7))
rng.shuffle(perm)
b = relabel(switch(a, {1, 4, 5}), perm)
cert = are_switching_isomorphic(a, b)
print("certificate:", cert.to_dict())
print("verifies:", verify_certificate(a, b, cert))
