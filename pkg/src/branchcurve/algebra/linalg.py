"""Exact linear algebra over the rationals and over polynomial rings."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .poly import RatPoly


def _integer_rows(matrix: Sequence[Sequence]) -> list:
    rows = []
    for row in matrix:
        row = [Fraction(v) for v in row]
        scale = lcm(*(v.denominator for v in row)) if row else 1
        rows.append([int(v * scale) for v in row])
    return rows


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    m = _integer_rows(matrix)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        for i in range(r + 1, nrows):
            a = m[i][col]
            row_i, row_r = m[i], m[r]
            for j in range(col + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rref(matrix: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form over Q; returns (rows, pivot_columns)."""
    m = [[Fraction(v) for v in row] for row in matrix]
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list:
    """Basis of the right kernel, one Fraction vector per free column."""
    if not matrix:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    rows, pivots = rref(matrix)
    n = len(matrix[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * n
        vec[fcol] = Fraction(1)
        for row, pcol in zip(rows, pivots):
            vec[pcol] = -row[fcol]
        basis.append(vec)
    return basis


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant of a square rational matrix (Bareiss on the integer-scaled rows)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in matrix:
        row = [Fraction(v) for v in row]
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
        s = lcm(*(v.denominator for v in row))
        scale *= s
        m.append([int(v * s) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1]) / scale


def poly_det(matrix: Sequence[Sequence[RatPoly]]) -> RatPoly:
    """Determinant of a square matrix of polynomials (Bareiss with exact division)."""
    n = len(matrix)
    variables = set()
    for row in matrix:
        for entry in row:
            if isinstance(entry, RatPoly):
                variables |= set(entry.vars)
    m = []
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
        m.append([
            (e if isinstance(e, RatPoly) else RatPoly.constant(e)).with_vars(variables)
            for e in row
        ])
    if n == 0:
        return RatPoly.constant(1, variables)
    sign = 1
    prev = RatPoly.constant(1, variables)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return RatPoly.constant(0, variables)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign
