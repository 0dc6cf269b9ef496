"""Exact characteristic polynomials and cospectrality.

Cospectrality is decided on integer coefficients only.  Floating-point
eigenvalues are available through :func:`eigenvalues_approx` for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import SignedGraph, adjacency_matrix
from .errors import NonSquare, NonSymmetric, TooLarge

__all__ = [
    "CharPoly",
    "char_poly",
    "char_poly_oracle",
    "graph_char_poly",
    "cospectral",
    "eigenvalues_approx",
    "ORACLE_MAX_N",
]

ORACLE_MAX_N = 9


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial ``sum(coeffs[k] * x**k)``; constant term first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items) -> "CharPoly":
        return cls(tuple(int(c) for c in items))

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_int_rows(m) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in (m.tolist() if isinstance(m, np.ndarray) else m)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NonSquare(f"expected a square matrix, got {n} rows of lengths {sorted({len(r) for r in rows})}")
    return rows


def char_poly(m) -> CharPoly:
    """Coefficients of det(xI - m) by Berkowitz's division-free algorithm.

    Works on Python integers throughout, so no intermediate value is ever
    rounded or overflows.
    """
    a = _as_int_rows(m)
    n = len(a)
    # p holds the polynomial of the leading k x k block, highest degree first
    p = [1]
    for k in range(n):
        row = a[k][:k]
        col = [a[i][k] for i in range(k)]
        toeplitz = [1, -a[k][k]]
        vec = col
        for _ in range(k):
            toeplitz.append(-sum(r * v for r, v in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(k)) for i in range(k)]
        new = [0] * (k + 2)
        for i in range(k + 2):
            acc = 0
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                acc += toeplitz[i - j] * p[j]
            new[i] = acc
        p = new
    return CharPoly(tuple(reversed(p)))


def _bareiss_det(rows: list[list[int]]) -> int:
    a = [r[:] for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def char_poly_oracle(m) -> CharPoly:
    """Independent route to det(xI - m): evaluate at x = 0..n, interpolate exactly.

    Determinants come from fraction-free Bareiss elimination and the
    interpolation uses Newton divided differences over :class:`Fraction`.
    Restricted to n <= 9 so it stays cheap enough for test suites.
    """
    a = _as_int_rows(m)
    n = len(a)
    if n > ORACLE_MAX_N:
        raise TooLarge(f"oracle limited to n <= {ORACLE_MAX_N}, got n = {n}")
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        shifted = [[(x if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]
        ys.append(Fraction(_bareiss_det(shifted)))
    # divided differences in place
    coef = ys[:]
    for level in range(1, n + 1):
        for i in range(n, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # expand Newton form into the monomial basis
    poly = [Fraction(0)] * (n + 1)
    poly[0] = coef[n]
    deg = 0
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        nxt = [Fraction(0)] * (n + 1)
        for k in range(deg + 1):
            nxt[k + 1] += poly[k]
            nxt[k] -= xs[i] * poly[k]
        nxt[0] += coef[i]
        poly = nxt
        deg += 1
    if any(c.denominator != 1 for c in poly):
        raise ArithmeticError("interpolated characteristic polynomial is not integral")
    return CharPoly(tuple(int(c) for c in poly))


def graph_char_poly(g: SignedGraph) -> CharPoly:
    return char_poly(adjacency_matrix(g))


def cospectral(a: SignedGraph, b: SignedGraph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    return graph_char_poly(a) == graph_char_poly(b)


def eigenvalues_approx(m) -> list[float]:
    """Floating-point eigenvalues, largest first.

    Advisory only: rounding makes these unsuitable for deciding
    cospectrality; use :func:`cospectral` for that.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise NonSymmetric("eigenvalues_approx needs a symmetric matrix")
    return sorted(np.linalg.eigvalsh(a).tolist(), reverse=True)
