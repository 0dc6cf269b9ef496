"""
Finding partitions and generating admissible instances
======================================================

Search a graph for every nontrivial admissible partition, then build
random instances that are admissible by construction.
"""

import time

from cospec import SearchLimits, find_ggm_partitions, find_gm_partitions
from cospec.fixtures import load_fixture
from cospec.gm import format_gm_partition, gm_switch
from cospec.search import generate_ggm_instance, generate_gm_instance
from cospec.spectrum import cospectral

g = load_fixture("signed_gm_8")
t0 = time.perf_counter()
found = find_gm_partitions(g, SearchLimits(t_max=2))
print(f"{len(found)} GM partitions with at most 2 parts ({time.perf_counter() - t0:.2f}s)")
for pi in found[:5]:
    print("  ", format_gm_partition(pi))

g8 = load_fixture("unsigned_ggm_8")
for p in find_ggm_partitions(g8)[:5]:
    print("  V1 =", p.v1, " V2 =", p.v2, " ell =", p.ell)

# generated instances are a deterministic function of the seed
for seed in range(5):
    h, pi = generate_gm_instance(seed, part_sizes=(4, 2), d_size=2, require_half=True)
    print(f"seed {seed}: n={h.n} m={h.num_edges} cospectral={cospectral(h, gm_switch(h, pi))}")

h, p = generate_ggm_instance(9, m=4, d_size=3)
print("generalized instance: n =", h.n, " ell =", p.ell)
