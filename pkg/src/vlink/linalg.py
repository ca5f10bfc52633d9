"""Exact matrix routines over Z and Z[t, 1/t].

Matrices are plain lists of rows.  Entries are either Python ints or
:class:`~vlink.laurent.LaurentPoly`; both support ``*``, ``-`` and exact
``//``, which is all fraction-free elimination needs.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .laurent import ONE, ZERO, LaurentPoly, laurent_gcd


class BoundExceeded(RuntimeError):
    """A configured enumeration or state-space bound was exceeded."""


def _is_zero(x) -> bool:
    return x == 0 if isinstance(x, int) else x.is_zero()


def bareiss_det(matrix: Sequence[Sequence], one=1):
    """Determinant by fraction-free Gaussian elimination.

    ``one`` is the multiplicative identity of the entry ring and is returned
    for the empty matrix.
    """
    n = len(matrix)
    if n == 0:
        return one
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return one * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def submatrix(matrix, rows, cols):
    return [[matrix[i][j] for j in cols] for i in rows]


def minor(matrix, drop_rows, drop_cols, one=1):
    nrows = len(matrix)
    ncols = len(matrix[0]) if matrix else 0
    rows = [i for i in range(nrows) if i not in set(drop_rows)]
    cols = [j for j in range(ncols) if j not in set(drop_cols)]
    return bareiss_det(submatrix(matrix, rows, cols), one)


def all_minors(matrix, size: int, ncols: int | None = None, one=1):
    """Yield every ``size x size`` minor of ``matrix`` (row-major order of choices)."""
    nrows = len(matrix)
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if size == 0:
        yield one
        return
    if size > nrows or size > ncols:
        return
    for rows in combinations(range(nrows), size):
        sub_rows = [matrix[i] for i in rows]
        for cols in combinations(range(ncols), size):
            yield bareiss_det([[r[j] for j in cols] for r in sub_rows], one)


def laurent_minor_gcd(matrix, size: int, ncols: int) -> LaurentPoly:
    """gcd of all ``size x size`` minors of a Laurent matrix (0 if there are none)."""
    g = ZERO
    for d in all_minors(matrix, size, ncols, one=ONE):
        if d.is_zero():
            continue
        g = laurent_gcd(g, d)
        if g == ONE:
            break
    return g


def invariant_factors(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Nonzero invariant factors of an integer matrix (Smith normal form diagonal)."""
    a = [list(map(int, row)) for row in matrix]
    nrows = len(a)
    if ncols is None:
        ncols = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(nrows, ncols):
        # pivot: smallest nonzero magnitude in the remaining block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # divisibility of the rest of the block by the pivot
                bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t into the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
            _, i, j = min(cands)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def determinantal_divisor(matrix: Sequence[Sequence[int]], k: int, ncols: int | None = None) -> int:
    """gcd of all ``k x k`` minors: product of the first ``k`` invariant factors, 0 if rank < k."""
    if k == 0:
        return 1
    inv = invariant_factors(matrix, ncols)
    if len(inv) < k:
        return 0
    out = 1
    for d in inv[:k]:
        out *= d
    return out
