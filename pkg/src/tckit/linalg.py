"""Exact Gaussian elimination on small square matrices of Scalars."""

from __future__ import annotations

from .errors import ScalarDivisionByZero


def _pivot(rows, col, start):
    for r in range(start, len(rows)):
        if not rows[r][col].is_zero():
            return r
    return None


def determinant(m):
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    rows = [list(r) for r in m]
    det = rows[0][0].field.one()
    for c in range(n):
        p = _pivot(rows, c, c)
        if p is None:
            return det.field.zero()
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det = det * piv
        inv = piv.inverse()
        for r in range(c + 1, n):
            if rows[r][c].is_zero():
                continue
            k = rows[r][c] * inv
            rows[r] = [x - k * y for x, y in zip(rows[r], rows[c])]
    return det


def inverse(m):
    n = len(m)
    one, zero = m[0][0].field.one(), m[0][0].field.zero()
    rows = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        p = _pivot(rows, c, c)
        if p is None:
            raise ScalarDivisionByZero("singular matrix")
        rows[c], rows[p] = rows[p], rows[c]
        inv = rows[c][c].inverse()
        rows[c] = [x * inv for x in rows[c]]
        for r in range(n):
            if r != c and not rows[r][c].is_zero():
                k = rows[r][c]
                rows[r] = [x - k * y for x, y in zip(rows[r], rows[c])]
    return [row[n:] for row in rows]
