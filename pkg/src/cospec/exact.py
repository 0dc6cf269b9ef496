"""Small exact-rational matrix helpers on numpy object arrays of Fraction."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def rational(a) -> np.ndarray:
    """Copy ``a`` into an object array of :class:`Fraction`."""
    arr = np.asarray(a)
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = Fraction(x)
    return out


def identity(n: int) -> np.ndarray:
    return rational(np.eye(n, dtype=np.int64))


def ones(rows: int, cols: int | None = None) -> np.ndarray:
    return rational(np.ones((rows, rows if cols is None else cols), dtype=np.int64))


def block_diag(*blocks) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = rational(np.zeros((n, n), dtype=np.int64))
    at = 0
    for b in blocks:
        k = b.shape[0]
        out[at:at + k, at:at + k] = b
        at += k
    return out


def reorder(a, order) -> np.ndarray:
    """Symmetric permutation: row/column ``i`` of the result is ``order[i]`` of ``a``."""
    idx = np.asarray(order, dtype=np.intp)
    return np.asarray(a)[np.ix_(idx, idx)]


def equal(a, b) -> bool:
    a, b = np.asarray(a), np.asarray(b)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def is_integral(a) -> bool:
    return all(Fraction(x).denominator == 1 for x in np.asarray(a).flat)
