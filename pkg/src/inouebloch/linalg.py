"""Exact linear algebra over the rationals.

Two independent rank routines are provided: a fraction-free Bareiss
elimination on integer matrices (the production path) and a plain
Gauss-Jordan elimination over :class:`fractions.Fraction` (used as a
cross-check and for span computations).  Nothing here uses floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]


def as_fraction_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def clear_denominators(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    if all(type(x) is int for x in row):
        return list(row)
    den = 1
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row]


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank by fraction-free (Bareiss) elimination.

    Rational input is converted row by row to integers first; row scaling
    does not change the rank.  Every division performed is exact.
    """
    a = [clear_denominators(r) for r in rows]
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, n_rows):
            f = a[r][col]
            row = a[r]
            prow = a[rank]
            for c in range(col + 1, n_cols):
                # exact by Sylvester's identity
                row[c] = (p * row[c] - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    a = as_fraction_matrix(rows)
    if not a:
        return [], []
    n_rows, n_cols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    return a[:r], pivots


def gauss_rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def rank(rows: Sequence[Sequence]) -> int:
    return bareiss_rank(rows)


def nullity(rows: Sequence[Sequence], n_cols: int) -> int:
    """Dimension of the right kernel of a matrix with ``n_cols`` columns."""
    if not rows:
        return n_cols
    return n_cols - rank(rows)


def in_row_span(vector: Sequence, basis_rref: Matrix, pivots: Sequence[int]) -> bool:
    """Whether ``vector`` lies in the span of rows already in RREF."""
    v = [Fraction(x) for x in vector]
    for row, col in zip(basis_rref, pivots):
        f = v[col]
        if f:
            v = [x - f * y for x, y in zip(v, row)]
    return not any(v)
