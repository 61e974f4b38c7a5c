"""Bivariate permanent polynomial ``per(x I + λ A + Ā)`` of a graph.

The fast path is Ryser's inclusion-exclusion formula

    per(M) = (-1)^n  sum_{S ⊆ [n]}  (-1)^{|S|}  prod_i  sum_{j in S} M[i, j]

evaluated with column subsets in binary-reflected Gray-code order.  For the
matrix ``x I + λ A + Ā`` the row sum of row ``i`` over ``S`` is the linear
factor ``x [i in S] + a_i λ + b_i`` where ``a_i = |N(i) ∩ S|`` and
``b_i = |S \\ (N(i) ∪ {i})|``; toggling one column changes each counter by
at most one, so a Gray-code step costs ``O(n)`` before the product.

The kernel runs in numba on ``int64``.  Intermediate per-subset products can
exceed 64 bits for ``n >= 16``; two's-complement wraparound is a ring
homomorphism onto Z/2^64 and every final coefficient lies in ``[0, n!]``
with ``n! < 2^63`` for ``n <= 20``, so the wrapped result is exact.  The
output is still checked (nonnegative, total mass ``n!``).
"""

from __future__ import annotations

import math
from itertools import permutations

import numba
import numpy as np

from .bipoly import INT128_MAX, INT128_MIN, MAX_ORDER, BiPoly, add_assign, mul_linear_factor, one, zero
from .errors import CoefficientOverflow, OrderTooLarge, PermanentOverflow
from .graphs import Graph

NAIVE_MAX_ORDER = 9


@numba.njit(cache=True, nogil=True)
def _ryser_gray(rows, n):
    acc = np.zeros((n + 1, n + 1), dtype=np.int64)
    if n == 0:
        acc[0, 0] = 1
        return acc
    prod = np.zeros((n + 1, n + 1), dtype=np.int64)
    lam_count = np.zeros(n, dtype=np.int64)
    const_count = np.zeros(n, dtype=np.int64)
    in_subset = np.zeros(n, dtype=np.int64)
    subset = np.uint64(0)
    size = 0
    for k in range(1, 1 << n):
        # Gray code: step k toggles the column at the lowest set bit of k.
        col = 0
        while not (k >> col) & 1:
            col += 1
        bit = np.uint64(1) << np.uint64(col)
        adding = (subset & bit) == 0
        subset ^= bit
        delta = 1 if adding else -1
        size += delta
        nbrs = rows[col]
        for i in range(n):
            if i == col:
                in_subset[i] = 1 if adding else 0
            elif (nbrs >> np.uint64(i)) & np.uint64(1):
                lam_count[i] += delta
            else:
                const_count[i] += delta

        prod[:, :] = 0
        prod[0, 0] = 1
        deg = 0
        for r in range(n):
            f = in_subset[r]
            a = lam_count[r]
            b = const_count[r]
            # In place: descending i and j leave p[i-1, j] and p[i, j-1] unread-yet.
            for i in range(deg + 1, -1, -1):
                for j in range(deg + 1 - i, -1, -1):
                    v = b * prod[i, j]
                    if j > 0:
                        v += a * prod[i, j - 1]
                    if i > 0 and f:
                        v += prod[i - 1, j]
                    prod[i, j] = v
            deg += 1

        if (n - size) % 2 == 0:
            acc += prod
        else:
            acc -= prod
    return acc


def _check_engine_order(g: Graph, limit: int = MAX_ORDER) -> None:
    if g.order > limit:
        raise OrderTooLarge(f"graph order {g.order} exceeds engine limit {limit}")


def _rows_array(g: Graph) -> np.ndarray:
    return np.array(g.adjacency, dtype=np.uint64)


def bivariate_permanent(g: Graph) -> BiPoly:
    """Exact ``P(G; x, λ)`` via Gray-code Ryser; ``g.order`` must be at most 20."""
    _check_engine_order(g)
    n = g.order
    table = _ryser_gray(_rows_array(g), n)
    p = BiPoly.from_matrix(table)
    if any(c < 0 for c in p.coeffs) or sum(p.coeffs) != math.factorial(n):
        raise CoefficientOverflow(f"inconsistent coefficients for order {n}")
    return p


def bivariate_permanent_reference(g: Graph) -> BiPoly:
    """Gray-code Ryser composed from :mod:`bipoly` operations.

    Slow pure-Python twin of :func:`bivariate_permanent`, kept for
    cross-checking the compiled kernel on small graphs.
    """
    _check_engine_order(g)
    n = g.order
    if n == 0:
        return one(0)
    acc = zero(n)
    lam_count = [0] * n
    const_count = [0] * n
    in_subset = [False] * n
    subset = 0
    for k in range(1, 1 << n):
        col = (k & -k).bit_length() - 1
        adding = not subset >> col & 1
        subset ^= 1 << col
        delta = 1 if adding else -1
        nbrs = g.adjacency[col]
        for i in range(n):
            if i == col:
                in_subset[i] = adding
            elif nbrs >> i & 1:
                lam_count[i] += delta
            else:
                const_count[i] += delta
        prod = one(n)
        for i in range(n):
            prod = mul_linear_factor(prod, in_subset[i], lam_count[i], const_count[i])
        if (n - subset.bit_count()) % 2:
            prod = -prod
        acc = add_assign(acc, prod)
    return acc


def bivariate_permanent_naive(g: Graph) -> BiPoly:
    """Sum over all permutations; each contributes ``x^fix λ^edges``."""
    _check_engine_order(g, NAIVE_MAX_ORDER)
    n = g.order
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    if n == 0:
        table[0, 0] = 1
        return BiPoly.from_matrix(table)
    perms = np.array(list(permutations(range(n))), dtype=np.intp)
    idx = np.arange(n)
    fixed = (perms == idx).sum(axis=1)
    adj = g.adjacency_matrix()
    on_edges = adj[idx, perms].sum(axis=1)
    np.add.at(table, (fixed, on_edges), 1)
    return BiPoly.from_matrix(table)


def permanental_matrix(g: Graph, x0: int, lam0: int) -> np.ndarray:
    """The integer matrix ``x0 I + lam0 A + Ā``."""
    n = g.order
    adj = g.adjacency_matrix()
    comp = 1 - adj - np.eye(n, dtype=np.int64)
    return x0 * np.eye(n, dtype=np.int64) + lam0 * adj + comp


def _check128(v: int) -> int:
    if not INT128_MIN <= v <= INT128_MAX:
        raise PermanentOverflow("permanent computation exceeds 128 bits")
    return v


def integer_permanent(m) -> int:
    """Permanent of a square integer matrix by Gray-code Ryser.

    Arithmetic is exact; any intermediate leaving the signed 128-bit range
    raises :class:`PermanentOverflow`.
    """
    rows = [[int(v) for v in row] for row in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"matrix size {n} exceeds {MAX_ORDER}")
    if n == 0:
        return 1
    sums = [0] * n
    subset = 0
    total = 0
    for k in range(1, 1 << n):
        col = (k & -k).bit_length() - 1
        if subset >> col & 1:
            for i in range(n):
                sums[i] -= rows[i][col]
        else:
            for i in range(n):
                sums[i] += rows[i][col]
        subset ^= 1 << col
        prod = 1
        for s in sums:
            prod = _check128(prod * s)
        if (n - subset.bit_count()) % 2:
            total = _check128(total - prod)
        else:
            total = _check128(total + prod)
    return total
