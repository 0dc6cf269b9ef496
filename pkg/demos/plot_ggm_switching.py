"""
Generalized GM switching with a constant side difference
========================================================

The 14-vertex signed graph switches along V_1 = {0..4}, V_2 = {5..9}.
Its underlying graphs before and after have different spectra, which
settles non-isomorphism without any search.
"""

from cospec import (
    ggm_switch,
    graph_char_poly,
    underlying_graph,
    validate_ggm,
    verify_conjugation_ggm,
)
from cospec.fixtures import fixture_partition, load_fixture
from cospec.ggm import difference_sums

g = load_fixture("signed_ggm_14")
p = fixture_partition("signed_ggm_14")

report = validate_ggm(g, p)
print("admissible:", report.admissible, " ell =", report.ell)
for v, case in sorted(report.cases.items()):
    print(f"  rest vertex {v}: {case.value}")

# every row of A_1 - B and of A_2 - B^T sums to ell
print("difference sums:", difference_sums(g, p))

h = ggm_switch(g, p, report)
print("p(x) =", graph_char_poly(g))
print("same polynomial after switching:", graph_char_poly(h) == graph_char_poly(g))
print("conjugation check:", verify_conjugation_ggm(g, p))

pu, pu_h = graph_char_poly(underlying_graph(g)), graph_char_poly(underlying_graph(h))
print("underlying before:", pu)
print("underlying after: ", pu_h)
print("underlying spectra differ:", pu != pu_h)
