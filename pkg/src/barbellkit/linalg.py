"""Exact rank and nullspace over the rationals.

Rank uses Bareiss fraction-free elimination on integer rows (each rational
row is scaled by the lcm of its denominators first, which does not change
the row space).  Nullspace bases come from reduced row echelon form over
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

__all__ = ["integer_rows", "bareiss_rank", "rank", "rref", "nullspace"]

Number = int | Fraction


def integer_rows(rows: Sequence[Sequence[Number]]) -> list[list[int]]:
    """Scale each row to integers."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = math.lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def bareiss_rank(M: list[list[int]]) -> int:
    """Rank of an integer matrix; ``M`` is modified in place.

    Column-by-column Bareiss elimination.  Columns without a pivot are
    skipped, which leaves the exact-division property intact because every
    entry below the current row in a skipped column is already zero.
    """
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        row_r = M[r]
        for i in range(r + 1, rows):
            row_i = M[i]
            a = row_i[c]
            for j in range(c + 1, cols):
                row_i[j] = (row_i[j] * piv - a * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        r += 1
    return r


def rank(rows: Sequence[Sequence[Number]]) -> int:
    return bareiss_rank(integer_rows(rows))


def rref(rows: Sequence[Sequence[Number]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace(rows: Sequence[Sequence[Number]], ncols: int) -> list[list[Fraction]]:
    """A basis of ``{x : rows @ x = 0}``, one vector per free column."""
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return basis
