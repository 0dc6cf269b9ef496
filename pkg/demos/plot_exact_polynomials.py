"""
Exact characteristic polynomials
================================

Division-free polynomials on Python integers, checked against an
interpolation oracle and against floating point eigenvalues.
"""

import numpy as np

from cospec import char_poly, eigenvalues_approx
from cospec.fixtures import load_fixture
from cospec.core import adjacency_matrix
from cospec.spectrum import char_poly_oracle

a = adjacency_matrix(load_fixture("signed_gm_8"))
p = char_poly(a)
print("p(x) =", p)
print("oracle agrees:", p == char_poly_oracle(a))

ev = eigenvalues_approx(a)
print("eigenvalues:", np.round(ev, 4))
# the product of the eigenvalues is det(A) = (-1)^n p(0)
print("prod(ev) =", round(float(np.prod(ev)), 6), " p(0) =", p.coeffs[0])

# coefficients grow past 64 bits without trouble
k = 3 * (np.ones((40, 40), dtype=np.int64) - np.eye(40, dtype=np.int64))
print("constant term of 3(J - I) on 40 vertices:", char_poly(k).coeffs[0])
